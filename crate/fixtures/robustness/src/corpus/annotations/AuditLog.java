package corpus.annotations;

import java.util.ArrayList;
import java.util.List;

@Audited(category = "storage", priority = 2)
public class AuditLog {
    @Deprecated
    private final List<String> entries = new ArrayList<>();

    private transient int flushes;

    @Audited(category = "write")
    public void append(@SuppressWarnings("unused") String entry) {
        entries.add(entry);
    }

    @Override
    public String toString() {
        return "AuditLog" + entries;
    }

    public int flushes() {
        return flushes;
    }
}

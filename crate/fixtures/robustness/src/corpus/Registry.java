package corpus;

import java.util.HashMap;
import java.util.Map;

public class Registry {
    private static final Map<String, Integer> CODES = new HashMap<>();
    private int hits, misses;

    static {
        CODES.put("ok", 200);
        CODES.put("missing", 404);
    }

    {
        hits = 0;
    }

    public Integer lookup(String name) {
        Integer code = CODES.get(name);
        if (code == null) {
            misses++;
        } else {
            hits++;
        }
        return code;
    }
}

import java.util.Objects;

public class Widget {
    private final String label;

    public Widget(String label) {
        this.label = Objects.requireNonNull(label);
    }

    public String label() {
        return label;
    }
}

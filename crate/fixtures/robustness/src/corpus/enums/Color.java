package corpus.enums;

public enum Color {
    RED, GREEN, BLUE;

    private static final Color DEFAULT = GREEN;

    public Color next() {
        Color[] all = values();
        return all[(ordinal() + 1) % all.length];
    }
}

package corpus.tricky;

/*
 * A block comment with braces: { { } } and even a stray "quote.
 */
public class Braces {
    // field comment with a brace {
    private int open;

    /* inline { comment */ private int close;

    /**
     * Javadoc with code: <pre>{ if (x) { y(); } }</pre>
     */
    public int balance() {
        return open - close; // trailing } comment
    }
}

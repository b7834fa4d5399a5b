package corpus.tricky;

public class Quotes {
    private String left = "{";
    private String right = "}";
    private String escaped = "brace \" and { inside";
    private char tick = '\'';
    private char brace = '{';

    public String wrap(String body) {
        return left + body + right + "\n";
    }
}

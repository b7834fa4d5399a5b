package corpus.tricky;

public class TextBlocks {
    private final String template = """
            { "kind": "report", "body": "..." }
            """;

    public String render(String body) {
        return template.replace("...", body);
    }
}

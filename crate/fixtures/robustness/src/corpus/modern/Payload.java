package corpus.modern;

public record Payload(String name, int size) {
    public boolean empty() {
        return size == 0;
    }
}

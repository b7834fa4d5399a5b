package corpus.nested;

public class Wrapper {
    public interface Listener {
        void changed(String property);
    }

    public enum State {
        OPEN, CLOSED
    }

    private State state = State.OPEN;
    private Listener listener;

    public void open(Listener listener) {
        this.listener = listener;
        this.state = State.OPEN;
        listener.changed("state");
    }
}

package corpus.nested;

public interface Machine {
    int capacity();

    @interface Spec {
        int watts();
    }

    class Profile {
        private String label;

        public String label() {
            return label;
        }
    }

    enum Mode {
        IDLE, BUSY
    }
}

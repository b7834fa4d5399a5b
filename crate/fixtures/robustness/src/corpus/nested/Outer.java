package corpus.nested;

public class Outer {
    private int depth;

    public static class Builder {
        private int depth = 1;

        public Outer build() {
            Outer outer = new Outer();
            outer.depth = depth;
            return outer;
        }
    }

    public class Cursor {
        private int offset;

        public int offset() {
            return offset;
        }

        public class Mark {
            private long stamp;
        }
    }

    public int depth() {
        return depth;
    }
}

package corpus.generics;

public class Box<T> {
    private T value;

    public Box(T value) {
        this.value = value;
    }

    public T get() {
        return value;
    }

    public <R> Box<R> map(java.util.function.Function<T, R> fn) {
        return new Box<>(fn.apply(value));
    }
}

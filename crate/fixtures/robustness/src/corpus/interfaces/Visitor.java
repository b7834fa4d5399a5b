package corpus.interfaces;

@FunctionalInterface
public interface Visitor<T, R> {
    R visit(T subject);
}

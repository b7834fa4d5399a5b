package corpus.interfaces;

public interface Shape {
    double PRECISION = 1e-9;

    double area();

    double perimeter();

    default boolean bigger(Shape other) {
        return area() > other.area();
    }

    static Shape unit() {
        return new Square(1.0);
    }
}

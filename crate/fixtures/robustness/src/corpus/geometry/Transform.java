package corpus.geometry;

public final class Transform {
    public static final Transform IDENTITY = new Transform(1.0, 0.0, 0.0, 1.0);

    private final double a;
    private final double b;
    private final double c;
    private final double d;

    private Transform(double a, double b, double c, double d) {
        this.a = a;
        this.b = b;
        this.c = c;
        this.d = d;
    }

    public static Transform scale(double factor) {
        return new Transform(factor, 0.0, 0.0, factor);
    }

    public Point apply(Point p) {
        return new Point(a * p.x() + b * p.y(), c * p.x() + d * p.y());
    }
}

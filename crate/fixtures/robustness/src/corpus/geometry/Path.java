package corpus.geometry;

import java.util.ArrayList;
import java.util.List;
import java.util.Map;

public class Path {
    private final List<Point> points = new ArrayList<>();
    private Map<String, List<Point>> segments;

    public void add(Point point) {
        points.add(point);
    }

    public List<Point> points() {
        return points;
    }

    public Map<String, List<Point>> segments() {
        return segments;
    }
}

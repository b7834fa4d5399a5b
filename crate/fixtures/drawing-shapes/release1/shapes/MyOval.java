package shapes;

import java.awt.Graphics;

/**
 * An ellipse inscribed in the bounding box of the anchor points.
 */
public class MyOval extends MyShape {

    public MyOval(int x1, int y1, int x2, int y2) {
        super(x1, y1, x2, y2);
    }

    @Override
    public void draw(Graphics g) {
        g.setColor(color);
        g.fillOval(Math.min(x1, x2), Math.min(y1, y2),
                Math.abs(x2 - x1), Math.abs(y2 - y1));
    }
}

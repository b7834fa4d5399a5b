package shapes;

import java.awt.Graphics;

/**
 * A straight segment between the two anchor points.
 */
public class MyLine extends MyShape {

    public MyLine(int x1, int y1, int x2, int y2) {
        super(x1, y1, x2, y2);
    }

    @Override
    public void draw(Graphics g) {
        g.setColor(color);
        g.drawLine(x1, y1, x2, y2);
    }
}

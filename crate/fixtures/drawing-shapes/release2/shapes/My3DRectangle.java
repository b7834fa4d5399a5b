package shapes;

import java.awt.Graphics;

/**
 * A raised rectangle drawn with a three-dimensional border effect.
 */
public class My3DRectangle extends MyShape {

    public My3DRectangle(int x1, int y1, int x2, int y2) {
        super(x1, y1, x2, y2);
    }

    @Override
    public void draw(Graphics g) {
        g.setColor(color);
        g.draw3DRect(Math.min(x1, x2), Math.min(y1, y2),
                Math.abs(x2 - x1), Math.abs(y2 - y1), true);
    }
}

package shapes;

import java.awt.Color;
import java.awt.Graphics;

/**
 * Base class of every drawable shape: two anchor points and a color.
 */
public abstract class MyShape {

    protected int x1;
    protected int y1;
    protected int x2;
    protected int y2;
    protected Color color;

    protected MyShape(int x1, int y1, int x2, int y2) {
        this.x1 = x1;
        this.y1 = y1;
        this.x2 = x2;
        this.y2 = y2;
        this.color = Color.BLACK;
    }

    public void setColor(Color color) {
        this.color = color;
    }

    public abstract void draw(Graphics g);
}

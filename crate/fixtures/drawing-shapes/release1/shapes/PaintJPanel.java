package shapes;

import java.awt.Graphics;
import java.util.ArrayList;
import java.util.List;
import javax.swing.JPanel;

/**
 * Panel that owns the shapes and repaints them on demand.
 */
public class PaintJPanel extends JPanel {

    private final List<MyShape> shapes = new ArrayList<>();

    public PaintJPanel() {
        addShape(new MyLine(10, 10, 160, 90));
    }

    public void addShape(MyShape shape) {
        shapes.add(shape);
        repaint();
    }

    @Override
    protected void paintComponent(Graphics g) {
        super.paintComponent(g);
        for (MyShape shape : shapes) {
            shape.draw(g);
        }
    }
}

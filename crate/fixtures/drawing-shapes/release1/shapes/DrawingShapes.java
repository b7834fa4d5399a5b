package shapes;

import java.awt.BorderLayout;
import javax.swing.JFrame;

/**
 * Entry point: opens a window that paints a handful of shapes.
 */
public class DrawingShapes {

    private final JFrame frame;

    public DrawingShapes(String title) {
        frame = new JFrame(title);
        frame.setDefaultCloseOperation(JFrame.EXIT_ON_CLOSE);
        frame.setLayout(new BorderLayout());
        frame.add(new PaintJPanel(), BorderLayout.CENTER);
        frame.setSize(420, 320);
    }

    public void show() {
        frame.setVisible(true);
    }

    public static void main(String[] args) {
        new DrawingShapes("Drawing Shapes").show();
    }
}

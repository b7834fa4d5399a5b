package corpus.nested;

import java.util.ArrayList;
import java.util.List;

public class Tree<T> {
    private Node<T> root;

    public static class Node<T> {
        private T value;
        private final List<Node<T>> children = new ArrayList<>();

        public Node(T value) {
            this.value = value;
        }

        public void attach(Node<T> child) {
            children.add(child);
        }
    }

    public Node<T> root() {
        return root;
    }

    public void plant(T value) {
        root = new Node<>(value);
    }
}

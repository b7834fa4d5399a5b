package corpus;

public class Simple {
    private int count;
    private String name;

    public Simple(String name) {
        this.name = name;
    }

    public int count() {
        return count;
    }

    public void rename(String name) {
        this.name = name;
    }
}

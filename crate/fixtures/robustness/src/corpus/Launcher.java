package corpus;

public class Launcher {
    private String[] arguments;

    public static void main(String... args) {
        Launcher launcher = new Launcher();
        launcher.arguments = args;
        launcher.run(args.length, args);
    }

    private void run(int count, String[] args) {
        for (int i = 0; i < count; i++) {
            System.out.println(args[i]);
        }
    }
}

package corpus.tricky;

public class Mixed {
    private int mask = 1 << 3;
    private boolean flag = 2 < 3;

    public int clamp(int value, int low, int high) {
        return value < low ? low : value > high ? high : value;
    }

    public int shift(int value) {
        int result = value >> 1;
        result = result >>> 2;
        return result << 1;
    }
}

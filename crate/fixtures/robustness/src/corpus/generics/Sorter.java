package corpus.generics;

import java.util.ArrayList;
import java.util.Collections;
import java.util.Comparator;
import java.util.List;

public final class Sorter {
    private Sorter() {
    }

    public static <T extends Comparable<T>> List<T> sorted(List<T> input) {
        List<T> copy = new ArrayList<>(input);
        Collections.sort(copy);
        return copy;
    }

    public static <T> List<T> sortedBy(List<T> input, Comparator<? super T> order) {
        List<T> copy = new ArrayList<>(input);
        copy.sort(order);
        return copy;
    }

    public static List<String> none() {
        return Collections.<String>emptyList();
    }
}

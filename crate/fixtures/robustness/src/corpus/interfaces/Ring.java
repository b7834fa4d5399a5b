package corpus.interfaces;

import java.util.Iterator;

public interface Ring<T> extends Iterable<T>, Comparable<Ring<T>> {
    int size();

    T axis();

    @Override
    Iterator<T> iterator();
}

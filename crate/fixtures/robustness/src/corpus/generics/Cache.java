package corpus.generics;

import java.util.LinkedHashMap;
import java.util.Map;
import java.util.function.Supplier;

public class Cache<K extends Comparable<K>, V> {
    private final Map<K, Supplier<? extends V>> loaders = new LinkedHashMap<>();
    private int capacity = 16;

    public void register(K key, Supplier<? extends V> loader) {
        loaders.put(key, loader);
    }

    public V resolve(K key) {
        Supplier<? extends V> loader = loaders.get(key);
        return loader == null ? null : loader.get();
    }

    public Map<K, Supplier<? extends V>> snapshot() {
        return new LinkedHashMap<>(loaders);
    }
}

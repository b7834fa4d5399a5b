package corpus.annotations;

public @interface Audited {
    String category() default "general";

    int priority() default 0;

    String[] tags() default {};
}

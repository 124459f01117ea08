package fixture.dup;

public class MirrorOps {
    public int first() {
        int acc = 0;
        acc = acc + 11;
        acc = acc * 7;
        acc = acc - 5;
        acc = acc + 13;
        return acc;
    }

    public int second() {
        int acc = 0;
        acc = acc + 11;
        acc = acc * 7;
        acc = acc - 5;
        acc = acc + 13;
        return acc;
    }

    private long verify(long q) {
        long w = q + 301;
        if (w > 404) {
            w = w - 55;
        }
        while (w > 209) {
            w = w - 21;
        }
        return w;
    }

    public long checkAll(long v) {
        return verify(v);
    }
}

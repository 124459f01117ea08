package fixture.speculative;

public abstract class AbstractSink {
    public abstract int accept(int v);
}

public class FileSink extends AbstractSink {
    public int accept(int v) {
        int x = v + 19;
        if (x > 44) {
            x = x - 6;
        }
        while (x > 28) {
            x = x - 3;
        }
        return x;
    }
}

public class Transformer {
    public int scale(int value, int factor) {
        int r = value * 3;
        if (r > 90) {
            r = r - 12;
        }
        while (r > 50) {
            r = r - 8;
        }
        return r;
    }
}

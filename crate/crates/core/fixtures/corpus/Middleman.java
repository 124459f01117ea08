package fixture.middleman;

public class Engine {
    public int start() {
        int s = 8;
        s = s + 44;
        return s;
    }

    public int halt() {
        int h = 2;
        h = h + 29;
        return h;
    }
    public int churn(int v) {
        int x = v + 53;
        if (x > 97) {
            x = x - 18;
        }
        while (x > 59) {
            x = x - 1;
        }
        return x;
    }
}

public class Facade {
    private Engine engine = new Engine();

    public int start() {
        return engine.start();
    }

    public int halt() {
        return engine.halt();
    }

    public int audit(int v) {
        int a = v + 62;
        if (a > 99) {
            a = a - 13;
        }
        while (a > 57) {
            a = a - 11;
        }
        return a;
    }
}

package fixture.shotgun;

public class Core {
    public static int touch() {
        int t = 3;
        t = t + 4;
        return t;
    }
    public int churn(int v) {
        int x = v + 15;
        if (x > 48) {
            x = x - 6;
        }
        while (x > 27) {
            x = x - 1;
        }
        return x;
    }
}

public class Billing {
    public int settle(int v) {
        int x = v + 21;
        if (x > 55) {
            x = x - 7;
        }
        while (x > 30) {
            x = x - 3;
        }
        Core.touch();
        return x;
    }
}

public class Shipping {
    public int track(int v) {
        int x = v + 27;
        if (x > 63) {
            x = x - 9;
        }
        while (x > 35) {
            x = x - 4;
        }
        Core.touch();
        return x;
    }
}

public class Catalog {
    public int price(int v) {
        int x = v + 33;
        if (x > 71) {
            x = x - 11;
        }
        while (x > 40) {
            x = x - 5;
        }
        Core.touch();
        return x;
    }
}

public class Inventory {
    public int restock(int v) {
        int x = v + 39;
        if (x > 79) {
            x = x - 13;
        }
        while (x > 45) {
            x = x - 6;
        }
        Core.touch();
        return x;
    }
}

public class Reports {
    public int summarize(int v) {
        int x = v + 45;
        if (x > 87) {
            x = x - 15;
        }
        while (x > 50) {
            x = x - 7;
        }
        Core.touch();
        return x;
    }
}

public class Signup {
    public int enroll(int v) {
        int x = v + 51;
        if (x > 95) {
            x = x - 17;
        }
        while (x > 55) {
            x = x - 8;
        }
        Core.touch();
        return x;
    }
}

public class Support {
    public int triage(int v) {
        int x = v + 57;
        if (x > 103) {
            x = x - 19;
        }
        while (x > 60) {
            x = x - 9;
        }
        Core.touch();
        return x;
    }
}

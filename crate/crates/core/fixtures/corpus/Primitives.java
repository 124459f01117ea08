package fixture.primitives;

public class LegacyText {
    public int assemble(int reps) {
        StringBuffer sb = new StringBuffer();
        sb.append(reps);
        sb.append(406);
        int n = sb.length();
        if (n > 12) {
            n = n - 3;
        }
        while (n > 8) {
            n = n - 2;
        }
        return n;
    }
}

public class Coordinates {
    public int addr1;
    public int addr2;
    public int addr3;

    public int locate(int v) {
        int p = v + addr1;
        p = p + addr2;
        p = p + addr3;
        if (p > 70) {
            p = p - 15;
        }
        while (p > 33) {
            p = p - 6;
        }
        return p;
    }
}

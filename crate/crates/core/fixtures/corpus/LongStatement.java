package fixture.longstatement;

public class ReportJoin {
    public int tally() {
        int total = 1 + 2 + 3 + 4 + 5 + 6 + 7 + 8 + 9 + 10 + 11 + 12
            + 13 + 14 + 15 + 16 + 17 + 18 + 19 + 20 + 21 + 22 + 23 + 24
            + 25 + 26 + 27 + 28 + 29 + 30 + 31 + 32 + 33 + 34 + 35 + 36
            + 37 + 38 + 39 + 40 + 41 + 42 + 43 + 44 + 45 + 46 + 47 + 48
            + 49 + 50 + 51 + 52 + 53 + 54 + 55 + 56 + 57 + 58 + 59 + 60;
        return total;
    }

    public int pick(int k) {
        switch (k) {
        case 0:
            return 10;
        case 1:
            return 21;
        case 2:
            return 32;
        case 3:
            return 43;
        case 4:
            return 54;
        case 5:
            return 65;
        case 6:
            return 76;
        case 7:
            return 87;
        case 8:
            return 98;
        case 9:
            return 109;
        case 10:
            return 120;
        case 11:
            return 131;
        default:
            return 5;
        }
    }
}

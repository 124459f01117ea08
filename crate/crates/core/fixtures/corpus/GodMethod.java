package fixture.godmethod;

public class BulkLoader {
    public long run() {
        long total = 0;
        total = total + 3;
        total = total + 10;
        total = total + 17;
        total = total + 24;
        total = total + 31;
        total = total + 38;
        total = total + 45;
        total = total + 52;
        total = total + 59;
        total = total + 66;
        total = total + 73;
        total = total + 80;
        total = total + 87;
        total = total + 94;
        total = total + 101;
        total = total + 108;
        total = total + 115;
        total = total + 122;
        total = total + 129;
        total = total + 136;
        total = total + 143;
        total = total + 150;
        total = total + 157;
        total = total + 164;
        total = total + 171;
        total = total + 178;
        total = total + 185;
        total = total + 192;
        total = total + 199;
        total = total + 206;
        total = total + 213;
        total = total + 220;
        total = total + 227;
        total = total + 234;
        total = total + 241;
        total = total + 248;
        total = total + 255;
        total = total + 262;
        total = total + 269;
        total = total + 276;
        total = total + 283;
        total = total + 290;
        total = total + 297;
        total = total + 304;
        total = total + 311;
        total = total + 318;
        total = total + 325;
        total = total + 332;
        total = total + 339;
        total = total + 346;
        total = total + 353;
        total = total + 360;
        total = total + 367;
        total = total + 374;
        total = total + 381;
        total = total + 388;
        total = total + 395;
        total = total + 402;
        total = total + 409;
        total = total + 416;
        total = total + 423;
        total = total + 430;
        total = total + 437;
        total = total + 444;
        total = total + 451;
        total = total + 458;
        total = total + 465;
        total = total + 472;
        total = total + 479;
        total = total + 486;
        total = total + 493;
        total = total + 500;
        total = total + 507;
        total = total + 514;
        total = total + 521;
        total = total + 528;
        total = total + 535;
        total = total + 542;
        total = total + 549;
        total = total + 556;
        total = total + 563;
        total = total + 570;
        total = total + 577;
        total = total + 584;
        total = total + 591;
        total = total + 598;
        total = total + 605;
        total = total + 612;
        total = total + 619;
        total = total + 626;
        total = total + 633;
        total = total + 640;
        total = total + 647;
        total = total + 654;
        total = total + 661;
        total = total + 668;
        total = total + 675;
        total = total + 682;
        total = total + 689;
        total = total + 696;
        total = total + 703;
        total = total + 710;
        total = total + 717;
        return total;
    }
    public int churn(int v) {
        int x = v + 19;
        if (x > 52) {
            x = x - 8;
        }
        while (x > 31) {
            x = x - 1;
        }
        return x;
    }
}

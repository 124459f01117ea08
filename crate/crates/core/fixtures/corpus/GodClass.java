package fixture.godclass;

public class MegaController {
    public int m001(int seed) {
        int acc = seed + 107;
        acc = acc * 5;
        acc = acc - 1211;
        acc = acc + 3313;
        return acc;
    }
    public int m002(int seed) {
        int acc = seed + 114;
        acc = acc * 7;
        acc = acc - 1222;
        acc = acc + 3326;
        return acc;
    }
    public int m003(int seed) {
        int acc = seed + 121;
        acc = acc * 9;
        acc = acc - 1233;
        acc = acc + 3339;
        return acc;
    }
    public int m004(int seed) {
        int acc = seed + 128;
        acc = acc * 11;
        acc = acc - 1244;
        acc = acc + 3352;
        return acc;
    }
    public int m005(int seed) {
        int acc = seed + 135;
        acc = acc * 13;
        acc = acc - 1255;
        acc = acc + 3365;
        return acc;
    }
    public int m006(int seed) {
        int acc = seed + 142;
        acc = acc * 15;
        acc = acc - 1266;
        acc = acc + 3378;
        return acc;
    }
    public int m007(int seed) {
        int acc = seed + 149;
        acc = acc * 17;
        acc = acc - 1277;
        acc = acc + 3391;
        return acc;
    }
    public int m008(int seed) {
        int acc = seed + 156;
        acc = acc * 19;
        acc = acc - 1288;
        acc = acc + 3404;
        return acc;
    }
    public int m009(int seed) {
        int acc = seed + 163;
        acc = acc * 21;
        acc = acc - 1299;
        acc = acc + 3417;
        return acc;
    }
    public int m010(int seed) {
        int acc = seed + 170;
        acc = acc * 23;
        acc = acc - 1310;
        acc = acc + 3430;
        return acc;
    }
    public int m011(int seed) {
        int acc = seed + 177;
        acc = acc * 25;
        acc = acc - 1321;
        acc = acc + 3443;
        return acc;
    }
    public int m012(int seed) {
        int acc = seed + 184;
        acc = acc * 27;
        acc = acc - 1332;
        acc = acc + 3456;
        return acc;
    }
    public int m013(int seed) {
        int acc = seed + 191;
        acc = acc * 29;
        acc = acc - 1343;
        acc = acc + 3469;
        return acc;
    }
    public int m014(int seed) {
        int acc = seed + 198;
        acc = acc * 31;
        acc = acc - 1354;
        acc = acc + 3482;
        return acc;
    }
    public int m015(int seed) {
        int acc = seed + 205;
        acc = acc * 33;
        acc = acc - 1365;
        acc = acc + 3495;
        return acc;
    }
    public int m016(int seed) {
        int acc = seed + 212;
        acc = acc * 35;
        acc = acc - 1376;
        acc = acc + 3508;
        return acc;
    }
    public int m017(int seed) {
        int acc = seed + 219;
        acc = acc * 37;
        acc = acc - 1387;
        acc = acc + 3521;
        return acc;
    }
    public int m018(int seed) {
        int acc = seed + 226;
        acc = acc * 39;
        acc = acc - 1398;
        acc = acc + 3534;
        return acc;
    }
    public int m019(int seed) {
        int acc = seed + 233;
        acc = acc * 41;
        acc = acc - 1409;
        acc = acc + 3547;
        return acc;
    }
    public int m020(int seed) {
        int acc = seed + 240;
        acc = acc * 43;
        acc = acc - 1420;
        acc = acc + 3560;
        return acc;
    }
    public int m021(int seed) {
        int acc = seed + 247;
        acc = acc * 45;
        acc = acc - 1431;
        acc = acc + 3573;
        return acc;
    }
    public int m022(int seed) {
        int acc = seed + 254;
        acc = acc * 47;
        acc = acc - 1442;
        acc = acc + 3586;
        return acc;
    }
    public int m023(int seed) {
        int acc = seed + 261;
        acc = acc * 49;
        acc = acc - 1453;
        acc = acc + 3599;
        return acc;
    }
    public int m024(int seed) {
        int acc = seed + 268;
        acc = acc * 51;
        acc = acc - 1464;
        acc = acc + 3612;
        return acc;
    }
    public int m025(int seed) {
        int acc = seed + 275;
        acc = acc * 53;
        acc = acc - 1475;
        acc = acc + 3625;
        return acc;
    }
    public int m026(int seed) {
        int acc = seed + 282;
        acc = acc * 55;
        acc = acc - 1486;
        acc = acc + 3638;
        return acc;
    }
    public int m027(int seed) {
        int acc = seed + 289;
        acc = acc * 57;
        acc = acc - 1497;
        acc = acc + 3651;
        return acc;
    }
    public int m028(int seed) {
        int acc = seed + 296;
        acc = acc * 59;
        acc = acc - 1508;
        acc = acc + 3664;
        return acc;
    }
    public int m029(int seed) {
        int acc = seed + 303;
        acc = acc * 61;
        acc = acc - 1519;
        acc = acc + 3677;
        return acc;
    }
    public int m030(int seed) {
        int acc = seed + 310;
        acc = acc * 63;
        acc = acc - 1530;
        acc = acc + 3690;
        return acc;
    }
    public int m031(int seed) {
        int acc = seed + 317;
        acc = acc * 65;
        acc = acc - 1541;
        acc = acc + 3703;
        return acc;
    }
    public int m032(int seed) {
        int acc = seed + 324;
        acc = acc * 67;
        acc = acc - 1552;
        acc = acc + 3716;
        return acc;
    }
    public int m033(int seed) {
        int acc = seed + 331;
        acc = acc * 69;
        acc = acc - 1563;
        acc = acc + 3729;
        return acc;
    }
    public int m034(int seed) {
        int acc = seed + 338;
        acc = acc * 71;
        acc = acc - 1574;
        acc = acc + 3742;
        return acc;
    }
    public int m035(int seed) {
        int acc = seed + 345;
        acc = acc * 73;
        acc = acc - 1585;
        acc = acc + 3755;
        return acc;
    }
    public int m036(int seed) {
        int acc = seed + 352;
        acc = acc * 75;
        acc = acc - 1596;
        acc = acc + 3768;
        return acc;
    }
    public int m037(int seed) {
        int acc = seed + 359;
        acc = acc * 77;
        acc = acc - 1607;
        acc = acc + 3781;
        return acc;
    }
    public int m038(int seed) {
        int acc = seed + 366;
        acc = acc * 79;
        acc = acc - 1618;
        acc = acc + 3794;
        return acc;
    }
    public int m039(int seed) {
        int acc = seed + 373;
        acc = acc * 81;
        acc = acc - 1629;
        acc = acc + 3807;
        return acc;
    }
    public int m040(int seed) {
        int acc = seed + 380;
        acc = acc * 83;
        acc = acc - 1640;
        acc = acc + 3820;
        return acc;
    }
    public int m041(int seed) {
        int acc = seed + 387;
        acc = acc * 85;
        acc = acc - 1651;
        acc = acc + 3833;
        return acc;
    }
    public int m042(int seed) {
        int acc = seed + 394;
        acc = acc * 87;
        acc = acc - 1662;
        acc = acc + 3846;
        return acc;
    }
    public int m043(int seed) {
        int acc = seed + 401;
        acc = acc * 89;
        acc = acc - 1673;
        acc = acc + 3859;
        return acc;
    }
    public int m044(int seed) {
        int acc = seed + 408;
        acc = acc * 91;
        acc = acc - 1684;
        acc = acc + 3872;
        return acc;
    }
    public int m045(int seed) {
        int acc = seed + 415;
        acc = acc * 93;
        acc = acc - 1695;
        acc = acc + 3885;
        return acc;
    }
    public int m046(int seed) {
        int acc = seed + 422;
        acc = acc * 95;
        acc = acc - 1706;
        acc = acc + 3898;
        return acc;
    }
    public int m047(int seed) {
        int acc = seed + 429;
        acc = acc * 97;
        acc = acc - 1717;
        acc = acc + 3911;
        return acc;
    }
    public int m048(int seed) {
        int acc = seed + 436;
        acc = acc * 99;
        acc = acc - 1728;
        acc = acc + 3924;
        return acc;
    }
    public int m049(int seed) {
        int acc = seed + 443;
        acc = acc * 101;
        acc = acc - 1739;
        acc = acc + 3937;
        return acc;
    }
    public int m050(int seed) {
        int acc = seed + 450;
        acc = acc * 103;
        acc = acc - 1750;
        acc = acc + 3950;
        return acc;
    }
    public int m051(int seed) {
        int acc = seed + 457;
        acc = acc * 105;
        acc = acc - 1761;
        acc = acc + 3963;
        return acc;
    }
    public int m052(int seed) {
        int acc = seed + 464;
        acc = acc * 107;
        acc = acc - 1772;
        acc = acc + 3976;
        return acc;
    }
    public int m053(int seed) {
        int acc = seed + 471;
        acc = acc * 109;
        acc = acc - 1783;
        acc = acc + 3989;
        return acc;
    }
    public int m054(int seed) {
        int acc = seed + 478;
        acc = acc * 111;
        acc = acc - 1794;
        acc = acc + 4002;
        return acc;
    }
    public int m055(int seed) {
        int acc = seed + 485;
        acc = acc * 113;
        acc = acc - 1805;
        acc = acc + 4015;
        return acc;
    }
    public int m056(int seed) {
        int acc = seed + 492;
        acc = acc * 115;
        acc = acc - 1816;
        acc = acc + 4028;
        return acc;
    }
    public int m057(int seed) {
        int acc = seed + 499;
        acc = acc * 117;
        acc = acc - 1827;
        acc = acc + 4041;
        return acc;
    }
    public int m058(int seed) {
        int acc = seed + 506;
        acc = acc * 119;
        acc = acc - 1838;
        acc = acc + 4054;
        return acc;
    }
    public int m059(int seed) {
        int acc = seed + 513;
        acc = acc * 121;
        acc = acc - 1849;
        acc = acc + 4067;
        return acc;
    }
    public int m060(int seed) {
        int acc = seed + 520;
        acc = acc * 123;
        acc = acc - 1860;
        acc = acc + 4080;
        return acc;
    }
    public int m061(int seed) {
        int acc = seed + 527;
        acc = acc * 125;
        acc = acc - 1871;
        acc = acc + 4093;
        return acc;
    }
    public int m062(int seed) {
        int acc = seed + 534;
        acc = acc * 127;
        acc = acc - 1882;
        acc = acc + 4106;
        return acc;
    }
    public int m063(int seed) {
        int acc = seed + 541;
        acc = acc * 129;
        acc = acc - 1893;
        acc = acc + 4119;
        return acc;
    }
    public int m064(int seed) {
        int acc = seed + 548;
        acc = acc * 131;
        acc = acc - 1904;
        acc = acc + 4132;
        return acc;
    }
    public int m065(int seed) {
        int acc = seed + 555;
        acc = acc * 133;
        acc = acc - 1915;
        acc = acc + 4145;
        return acc;
    }
    public int m066(int seed) {
        int acc = seed + 562;
        acc = acc * 135;
        acc = acc - 1926;
        acc = acc + 4158;
        return acc;
    }
    public int m067(int seed) {
        int acc = seed + 569;
        acc = acc * 137;
        acc = acc - 1937;
        acc = acc + 4171;
        return acc;
    }
    public int m068(int seed) {
        int acc = seed + 576;
        acc = acc * 139;
        acc = acc - 1948;
        acc = acc + 4184;
        return acc;
    }
    public int m069(int seed) {
        int acc = seed + 583;
        acc = acc * 141;
        acc = acc - 1959;
        acc = acc + 4197;
        return acc;
    }
    public int m070(int seed) {
        int acc = seed + 590;
        acc = acc * 143;
        acc = acc - 1970;
        acc = acc + 4210;
        return acc;
    }
    public int m071(int seed) {
        int acc = seed + 597;
        acc = acc * 145;
        acc = acc - 1981;
        acc = acc + 4223;
        return acc;
    }
    public int m072(int seed) {
        int acc = seed + 604;
        acc = acc * 147;
        acc = acc - 1992;
        acc = acc + 4236;
        return acc;
    }
    public int m073(int seed) {
        int acc = seed + 611;
        acc = acc * 149;
        acc = acc - 2003;
        acc = acc + 4249;
        return acc;
    }
    public int m074(int seed) {
        int acc = seed + 618;
        acc = acc * 151;
        acc = acc - 2014;
        acc = acc + 4262;
        return acc;
    }
    public int m075(int seed) {
        int acc = seed + 625;
        acc = acc * 153;
        acc = acc - 2025;
        acc = acc + 4275;
        return acc;
    }
    public int m076(int seed) {
        int acc = seed + 632;
        acc = acc * 155;
        acc = acc - 2036;
        acc = acc + 4288;
        return acc;
    }
    public int m077(int seed) {
        int acc = seed + 639;
        acc = acc * 157;
        acc = acc - 2047;
        acc = acc + 4301;
        return acc;
    }
    public int m078(int seed) {
        int acc = seed + 646;
        acc = acc * 159;
        acc = acc - 2058;
        acc = acc + 4314;
        return acc;
    }
    public int m079(int seed) {
        int acc = seed + 653;
        acc = acc * 161;
        acc = acc - 2069;
        acc = acc + 4327;
        return acc;
    }
    public int m080(int seed) {
        int acc = seed + 660;
        acc = acc * 163;
        acc = acc - 2080;
        acc = acc + 4340;
        return acc;
    }
    public int m081(int seed) {
        int acc = seed + 667;
        acc = acc * 165;
        acc = acc - 2091;
        acc = acc + 4353;
        return acc;
    }
    public int m082(int seed) {
        int acc = seed + 674;
        acc = acc * 167;
        acc = acc - 2102;
        acc = acc + 4366;
        return acc;
    }
    public int m083(int seed) {
        int acc = seed + 681;
        acc = acc * 169;
        acc = acc - 2113;
        acc = acc + 4379;
        return acc;
    }
    public int m084(int seed) {
        int acc = seed + 688;
        acc = acc * 171;
        acc = acc - 2124;
        acc = acc + 4392;
        return acc;
    }
    public int m085(int seed) {
        int acc = seed + 695;
        acc = acc * 173;
        acc = acc - 2135;
        acc = acc + 4405;
        return acc;
    }
    public int m086(int seed) {
        int acc = seed + 702;
        acc = acc * 175;
        acc = acc - 2146;
        acc = acc + 4418;
        return acc;
    }
    public int m087(int seed) {
        int acc = seed + 709;
        acc = acc * 177;
        acc = acc - 2157;
        acc = acc + 4431;
        return acc;
    }
    public int m088(int seed) {
        int acc = seed + 716;
        acc = acc * 179;
        acc = acc - 2168;
        acc = acc + 4444;
        return acc;
    }
    public int m089(int seed) {
        int acc = seed + 723;
        acc = acc * 181;
        acc = acc - 2179;
        acc = acc + 4457;
        return acc;
    }
    public int m090(int seed) {
        int acc = seed + 730;
        acc = acc * 183;
        acc = acc - 2190;
        acc = acc + 4470;
        return acc;
    }
    public int m091(int seed) {
        int acc = seed + 737;
        acc = acc * 185;
        acc = acc - 2201;
        acc = acc + 4483;
        return acc;
    }
    public int m092(int seed) {
        int acc = seed + 744;
        acc = acc * 187;
        acc = acc - 2212;
        acc = acc + 4496;
        return acc;
    }
    public int m093(int seed) {
        int acc = seed + 751;
        acc = acc * 189;
        acc = acc - 2223;
        acc = acc + 4509;
        return acc;
    }
    public int m094(int seed) {
        int acc = seed + 758;
        acc = acc * 191;
        acc = acc - 2234;
        acc = acc + 4522;
        return acc;
    }
    public int m095(int seed) {
        int acc = seed + 765;
        acc = acc * 193;
        acc = acc - 2245;
        acc = acc + 4535;
        return acc;
    }
    public int m096(int seed) {
        int acc = seed + 772;
        acc = acc * 195;
        acc = acc - 2256;
        acc = acc + 4548;
        return acc;
    }
    public int m097(int seed) {
        int acc = seed + 779;
        acc = acc * 197;
        acc = acc - 2267;
        acc = acc + 4561;
        return acc;
    }
    public int m098(int seed) {
        int acc = seed + 786;
        acc = acc * 199;
        acc = acc - 2278;
        acc = acc + 4574;
        return acc;
    }
    public int m099(int seed) {
        int acc = seed + 793;
        acc = acc * 201;
        acc = acc - 2289;
        acc = acc + 4587;
        return acc;
    }
    public int m100(int seed) {
        int acc = seed + 800;
        acc = acc * 203;
        acc = acc - 2300;
        acc = acc + 4600;
        return acc;
    }
    public int m101(int seed) {
        int acc = seed + 807;
        acc = acc * 205;
        acc = acc - 2311;
        acc = acc + 4613;
        return acc;
    }
    public int m102(int seed) {
        int acc = seed + 814;
        acc = acc * 207;
        acc = acc - 2322;
        acc = acc + 4626;
        return acc;
    }
    public int m103(int seed) {
        int acc = seed + 821;
        acc = acc * 209;
        acc = acc - 2333;
        acc = acc + 4639;
        return acc;
    }
    public int m104(int seed) {
        int acc = seed + 828;
        acc = acc * 211;
        acc = acc - 2344;
        acc = acc + 4652;
        return acc;
    }
    public int m105(int seed) {
        int acc = seed + 835;
        acc = acc * 213;
        acc = acc - 2355;
        acc = acc + 4665;
        return acc;
    }
    public int m106(int seed) {
        int acc = seed + 842;
        acc = acc * 215;
        acc = acc - 2366;
        acc = acc + 4678;
        return acc;
    }
    public int m107(int seed) {
        int acc = seed + 849;
        acc = acc * 217;
        acc = acc - 2377;
        acc = acc + 4691;
        return acc;
    }
    public int m108(int seed) {
        int acc = seed + 856;
        acc = acc * 219;
        acc = acc - 2388;
        acc = acc + 4704;
        return acc;
    }
    public int m109(int seed) {
        int acc = seed + 863;
        acc = acc * 221;
        acc = acc - 2399;
        acc = acc + 4717;
        return acc;
    }
    public int m110(int seed) {
        int acc = seed + 870;
        acc = acc * 223;
        acc = acc - 2410;
        acc = acc + 4730;
        return acc;
    }
    public int m111(int seed) {
        int acc = seed + 877;
        acc = acc * 225;
        acc = acc - 2421;
        acc = acc + 4743;
        return acc;
    }
    public int m112(int seed) {
        int acc = seed + 884;
        acc = acc * 227;
        acc = acc - 2432;
        acc = acc + 4756;
        return acc;
    }
    public int m113(int seed) {
        int acc = seed + 891;
        acc = acc * 229;
        acc = acc - 2443;
        acc = acc + 4769;
        return acc;
    }
    public int m114(int seed) {
        int acc = seed + 898;
        acc = acc * 231;
        acc = acc - 2454;
        acc = acc + 4782;
        return acc;
    }
    public int m115(int seed) {
        int acc = seed + 905;
        acc = acc * 233;
        acc = acc - 2465;
        acc = acc + 4795;
        return acc;
    }
    public int m116(int seed) {
        int acc = seed + 912;
        acc = acc * 235;
        acc = acc - 2476;
        acc = acc + 4808;
        return acc;
    }
    public int m117(int seed) {
        int acc = seed + 919;
        acc = acc * 237;
        acc = acc - 2487;
        acc = acc + 4821;
        return acc;
    }
    public int m118(int seed) {
        int acc = seed + 926;
        acc = acc * 239;
        acc = acc - 2498;
        acc = acc + 4834;
        return acc;
    }
    public int m119(int seed) {
        int acc = seed + 933;
        acc = acc * 241;
        acc = acc - 2509;
        acc = acc + 4847;
        return acc;
    }
    public int m120(int seed) {
        int acc = seed + 940;
        acc = acc * 243;
        acc = acc - 2520;
        acc = acc + 4860;
        return acc;
    }
    public int m121(int seed) {
        int acc = seed + 947;
        acc = acc * 245;
        acc = acc - 2531;
        acc = acc + 4873;
        return acc;
    }
    public int m122(int seed) {
        int acc = seed + 954;
        acc = acc * 247;
        acc = acc - 2542;
        acc = acc + 4886;
        return acc;
    }
    public int m123(int seed) {
        int acc = seed + 961;
        acc = acc * 249;
        acc = acc - 2553;
        acc = acc + 4899;
        return acc;
    }
    public int m124(int seed) {
        int acc = seed + 968;
        acc = acc * 251;
        acc = acc - 2564;
        acc = acc + 4912;
        return acc;
    }
    public int m125(int seed) {
        int acc = seed + 975;
        acc = acc * 253;
        acc = acc - 2575;
        acc = acc + 4925;
        return acc;
    }
    public int m126(int seed) {
        int acc = seed + 982;
        acc = acc * 255;
        acc = acc - 2586;
        acc = acc + 4938;
        return acc;
    }
    public int m127(int seed) {
        int acc = seed + 989;
        acc = acc * 257;
        acc = acc - 2597;
        acc = acc + 4951;
        return acc;
    }
    public int m128(int seed) {
        int acc = seed + 996;
        acc = acc * 259;
        acc = acc - 2608;
        acc = acc + 4964;
        return acc;
    }
    public int m129(int seed) {
        int acc = seed + 1003;
        acc = acc * 261;
        acc = acc - 2619;
        acc = acc + 4977;
        return acc;
    }
    public int m130(int seed) {
        int acc = seed + 1010;
        acc = acc * 263;
        acc = acc - 2630;
        acc = acc + 4990;
        return acc;
    }
    public int m131(int seed) {
        int acc = seed + 1017;
        acc = acc * 265;
        acc = acc - 2641;
        acc = acc + 5003;
        return acc;
    }
    public int m132(int seed) {
        int acc = seed + 1024;
        acc = acc * 267;
        acc = acc - 2652;
        acc = acc + 5016;
        return acc;
    }
    public int m133(int seed) {
        int acc = seed + 1031;
        acc = acc * 269;
        acc = acc - 2663;
        acc = acc + 5029;
        return acc;
    }
    public int m134(int seed) {
        int acc = seed + 1038;
        acc = acc * 271;
        acc = acc - 2674;
        acc = acc + 5042;
        return acc;
    }
    public int m135(int seed) {
        int acc = seed + 1045;
        acc = acc * 273;
        acc = acc - 2685;
        acc = acc + 5055;
        return acc;
    }
    public int m136(int seed) {
        int acc = seed + 1052;
        acc = acc * 275;
        acc = acc - 2696;
        acc = acc + 5068;
        return acc;
    }
    public int m137(int seed) {
        int acc = seed + 1059;
        acc = acc * 277;
        acc = acc - 2707;
        acc = acc + 5081;
        return acc;
    }
    public int m138(int seed) {
        int acc = seed + 1066;
        acc = acc * 279;
        acc = acc - 2718;
        acc = acc + 5094;
        return acc;
    }
    public int m139(int seed) {
        int acc = seed + 1073;
        acc = acc * 281;
        acc = acc - 2729;
        acc = acc + 5107;
        return acc;
    }
    public int m140(int seed) {
        int acc = seed + 1080;
        acc = acc * 283;
        acc = acc - 2740;
        acc = acc + 5120;
        return acc;
    }
    public int m141(int seed) {
        int acc = seed + 1087;
        acc = acc * 285;
        acc = acc - 2751;
        acc = acc + 5133;
        return acc;
    }
    public int m142(int seed) {
        int acc = seed + 1094;
        acc = acc * 287;
        acc = acc - 2762;
        acc = acc + 5146;
        return acc;
    }
    public int m143(int seed) {
        int acc = seed + 1101;
        acc = acc * 289;
        acc = acc - 2773;
        acc = acc + 5159;
        return acc;
    }
    public int m144(int seed) {
        int acc = seed + 1108;
        acc = acc * 291;
        acc = acc - 2784;
        acc = acc + 5172;
        return acc;
    }
    public int m145(int seed) {
        int acc = seed + 1115;
        acc = acc * 293;
        acc = acc - 2795;
        acc = acc + 5185;
        return acc;
    }
}

#include "cheb/baselines.hpp"

namespace cheb {

// Published appendix values, verbatim; cells separated by "&", "-" marks an empty cell.

std::string_view baseline_text(int id) {
  switch (id) {
    case 1:
      return R"(2 & 36.0416 & 40.1778 & 52.4347 & 45.0838 & 44.8487
3 & 18.5920 & 20.7192 & 27.0288 & 23.2331 & 23.2605
4 & 15.9830 & 17.8055 & 23.2168 & 20.1463 & 20.2091
5 & 13.0111 & 14.4971 & 18.9071 & 16.1955 & 16.3079
6 & 12.4404 & 13.8590 & 18.0713 & 15.5438 & 15.6635
7 & 11.1248 & 12.3959 & 16.1678 & 13.7372 & 13.8800
8 & 10.9182 & 12.1647 & 15.8643 & 13.5161 & 13.6612
9 & 10.2616 & 11.4346 & 14.9148 & 12.6055 & 12.7623
10 & 10.1957 & 11.3602 & 14.8164 & 12.5560 & 12.7132
11 & 9.6703 & 10.7765 & 14.0581 & 11.8096 & 11.9765
12 & 9.6569 & 10.7608 & 14.0364 & 11.8212 & 11.9877
13 & 9.2696 & 10.3307 & 13.4778 & 11.2655 & 11.4392
14 & 9.2793 & 10.3410 & 13.4902 & 11.3018 & 11.4750
15 & 8.9781 & 10.0066 & 13.0560 & 10.8663 & 11.0452
16 & 9.0005 & 10.0310 & 13.0870 & 10.9163 & 11.0945
17 & 8.7555 & 9.7590 & 12.7340 & 10.5595 & 10.7423
18 & 8.7833 & 9.7896 & 12.7731 & 10.6141 & 10.7961
19 & 8.5795 & 9.5634 & 12.4795 & 10.3158 & 10.5017
20 & 8.6100 & 9.5970 & 12.5226 & 10.3720 & 10.5571
21 & 8.5458 & 9.5256 & 12.4297 & 10.2832 & 10.4694)";
    case 2:
      return R"(1 & 39.217 & 291.601
2 & 22.479 & 64.860
3 & 16.364 & 32.718
4 & 13.116 & 20.945
5 & 11.077 & 15.053
6 & 9.666 & 11.586
7 & 8.625 & 9.330
8 & 7.823 & 7.758
9 & 7.183 & 6.607
10 & 6.660 & 5.732)";
    case 3:
      return R"(2 & 3 & 1.82048
3 & 23 & 0.956787
4 & 117 & 0.839953
5 & 1609 & 0.677198
6 & 9747 & 0.653259
7 & 184607 & 0.577273
8 & 1257728 & 0.569605
9 & 2.29e7 & 0.531078
10 & 1.56e8 & 0.530072
11 & 3.91e9 & 0.498035
12 & 2.74e10 & 0.499297
13 & 7.56e11 & 0.475297
14 & 5.43e12 & 0.477442
15 & 1.61e14 & 0.458541
16 & 1.17e15 & 0.461151
17 & 3.70e16 & 0.445613
18 & 2.73e17 & 0.448338
19 & 9.03e18 & 0.435310
20 & 6.74e19 & 0.438047
21 & 1e21 & 0.434294)";
    case 4:
      return R"(2 & 2914.82 & 1759 & 2.26E-03 & 0.28649 & 2.003 & 0.44511 & 0.27134 & 3.20E-03 & 0.20275 & 2.003 & 0.31501 & 0.19203
3 & 1004.56 & 3292 & 1.92E-03 & 0.05216 & 3.005 & 0.28090 & 0.05172 & 2.71E-03 & 0.03695 & 3.000 & 0.19872 & 0.03659
4 & 822.49 & 4663.1 & 2.26E-03 & 0.02557 & 4.009 & 0.24256 & 0.02547 & 3.19E-03 & 0.01812 & 4.003 & 0.17160 & 0.01802
5 & 599.17 & 6532.6 & 2.02E-03 & 0.01225 & 5.010 & 0.20219 & 0.01225 & 2.85E-03 & 8.6637 E-03 & 5.001 & 0.14304 & 8.6637 E-03
6 & 569.3 & 8004.2 & 2.35E-03 & 8.4069E-03 & 6.002 & 0.18914 & 8.4069E-03 & 3.33E-03 & 5.9476E-03 & 6.007 & 0.13381 & 5.9476E-03
7 & 479.55 & 1.0073 E4 & 2.17E-03 & 5.2678E-03 & 7.021 & 0.16900 & 5.2678E-03 & 3.06E-03 & 3.7266E-03 & 7.006 & 0.11956 & 3.7266E-03
8 & 470.92 & 1.1611 E4 & 2.48E-03 & 4.0823E-03 & 8.016 & 0.16217 & 4.0823E-03 & 3.50E-03 & 2.8882E-03 & 8.003 & 0.11473 & 2.8882E-03
9 & 428.75 & 1.3681 E4 & 2.41E-03 & 2.9687E-03 & 9.015 & 0.15093 & 2.9687E-03 & 3.41E-03 & 2.1003E-03 & 9.015 & 0.10678 & 2.1003E-03
10 & 427.67 & 1.5221 E4 & 2.73E-03 & 2.4617E-03 & 10.002 & 0.14686 & 2.4617E-03 & 3.87E-03 & 1.7417E-03 & 10.014 & 0.10391 & 1.7417E-03
11 & 394.15 & 1.7480 E4 & 2.61E-03 & 1.8846E-03 & 11.026 & 0.13805 & 1.8846E-03 & 3.69E-03 & 1.3333E-03 & 11.019 & 0.09767 & 1.3333E-03
12 & 395.45 & 1.9035 E4 & 2.93E-03 & 1.6252E-03 & 12.026 & 0.13531 & 1.6252E-03 & 4.14E-03 & 1.1499E-03 & 12.014 & 0.09574 & 1.1499E-03
13 & 371.19 & 2.1360 E4 & 2.81E-03 & 1.3049E-03 & 13.009 & 0.12868 & 1.3049E-03 & 3.98E-03 & 9.2322E-04 & 13.017 & 0.09104 & 9.2322E-04
14 & 373.33 & 2.2928 E4 & 3.13E-03 & 1.1547E-03 & 14.028 & 0.12669 & 1.1547E-03 & 4.42E-03 & 8.1702E-04 & 14.009 & 0.08964 & 8.1702E-04
15 & 354.71 & 2.5305 E4 & 3.02E-03 & 9.5867E-04 & 15.004 & 0.12146 & 9.5867E-04 & 4.28E-03 & 6.7832E-04 & 15.019 & 0.08594 & 6.7832E-04
16 & 357.25 & 2.6879 E4 & 3.33E-03 & 8.6431E-04 & 16.002 & 0.11995 & 8.6431E-04 & 4.72E-03 & 6.1159E-04 & 16.019 & 0.08488 & 6.1159E-04
17 & 342.25 & 2.9300 E4 & 3.24E-03 & 7.3537E-04 & 17.019 & 0.11567 & 7.3537E-04 & 4.58E-03 & 5.2033E-04 & 17.007 & 0.08185 & 5.2033E-04
18 & 344.86 & 3.0882 E4 & 3.55E-03 & 6.7207E-04 & 18.031 & 0.11448 & 6.7207E-04 & 5.02E-03 & 4.7558E-04 & 18.021 & 0.08101 & 4.7558E-04
19 & 336.07 & 3.3696 E4 & 3.26E-03 & 5.8200E-04 & 19.035 & 0.11073 & 5.8200E-04 & 4.61E-03 & 4.1182E-04 & 19.025 & 0.07835 & 4.1182E-04
20 & 337.66 & 3.5193 E4 & 3.60E-03 & 5.3776E-04 & 20.009 & 0.10980 & 5.3776E-04 & 5.10E-03 & 3.8054E-04 & 20.022 & 0.07770 & 3.8054E-04
21 & 335.48 & 3.7351 E4 & 0.99999 & 7.6933E-04 & 654.650 & 0.17047 & 7.6933E-04 & 0.99999 & 5.4400 E-04 & 519.59 & 0.12054 & 5.4400 E-04)";
    case 5:
      return R"(2 & 2914.82 & 1.5568 & 2.003 & 2.4187 & 1.4744 & 1.1018 & 2.003 & 1.7118 & 1.0435
3 & 1004.56 & 1.4654 E-1 & 3.005 & 7.8910 E-1 & 1.4530 E-1 & 1.0379 E-1 & 3.000 & 5.5825 E-1 & 1.0279 E-1
4 & 822.49 & 5.8817 E-2 & 4.009 & 5.5787 E-1 & 5.8573 E-2 & 4.1663 E-2 & 4.003 & 3.9468 E-1 & 4.1439 E-2
5 & 599.17 & 1.8856 E-2 & 5.010 & 3.1131 E-1 & 1.8856 E-2 & 1.3339 E-2 & 5.001 & 2.2023 E-1 & 1.3339 E-2
6 & 569.30 & 1.1985 E-2 & 6.002 & 2.6964 E-1 & 1.1985 E-2 & 8.4791 E-3 & 6.007 & 1.9076 E-1 & 8.4791 E-3
7 & 479.55 & 5.6230 E-3 & 7.021 & 1.8040 E-1 & 5.6230 E-3 & 3.9779 E-3 & 7.006 & 1.2762 E-1 & 3.9779 E-3
8 & 470.92 & 4.2129 E-3 & 8.016 & 1.6736 E-1 & 4.2129 E-3 & 2.9805 E-3 & 8.003 & 1.1840 E-1 & 2.9805 E-3
9 & 428.75 & 2.5453 E-3 & 9.015 & 1.2940 E-1 & 2.5453 E-3 & 1.8007 E-3 & 9.015 & 9.1550 E-2 & 1.8007 E-3
10 & 427.67 & 2.0996 E-3 & 10.002 & 1.2526 E-1 & 2.0996 E-3 & 1.4855 E-3 & 10.014 & 8.8623 E-2 & 1.4855 E-3
11 & 394.15 & 1.3451 E-3 & 11.026 & 9.8535 E-2 & 1.3451 E-3 & 9.5167 E-4 & 11.019 & 6.9713 E-2 & 9.5167 E-4
12 & 395.45 & 1.1687 E-3 & 12.026 & 9.7304 E-2 & 1.1687 E-3 & 8.2693 E-4 & 12.014 & 6.8847 E-2 & 8.2693 E-4
13 & 371.19 & 8.0811 E-4 & 13.009 & 7.9693 E-2 & 8.0811 E-4 & 5.7176 E-4 & 13.017 & 5.6385 E-2 & 5.7176 E-4
14 & 373.33 & 7.2519 E-4 & 14.028 & 7.9565 E-2 & 7.2519 E-4 & 5.1312 E-4 & 14.009 & 5.6298 E-2 & 5.1312 E-4
15 & 354.71 & 5.2964 E-4 & 15.004 & 6.7102 E-2 & 5.2964 E-4 & 3.7475 E-4 & 15.019 & 4.7479 E-2 & 3.7475 E-4
16 & 357.25 & 4.8636 E-4 & 16.002 & 6.7498 E-2 & 4.8636 E-4 & 3.4415 E-4 & 16.019 & 4.7762 E-2 & 3.4415 E-4
17 & 342.25 & 3.6968 E-4 & 17.019 & 5.8148 E-2 & 3.6968 E-4 & 2.6158 E-4 & 17.007 & 4.1145 E-2 & 2.6158 E-4
18 & 344.86 & 3.4481 E-4 & 18.031 & 5.8734 E-2 & 3.4481 E-4 & 2.4400 E-4 & 18.021 & 4.1562 E-2 & 2.4400 E-4
19 & 336.07 & 2.5749 E-4 & 19.035 & 4.8988 E-2 & 2.5749 E-4 & 1.8220 E-4 & 19.025 & 3.4663 E-2 & 1.8220 E-4
20 & 337.66 & 2.4644 E-4 & 20.009 & 5.0320 E-2 & 2.4644 E-4 & 1.7439 E-4 & 20.022 & 3.5608 E-2 & 1.7439 E-4
21 & 335.48 & 3.3591 E-4 & 654.65 & 7.4434 E-2 & 3.3591 E-4 & 2.3753 E-4 & 519.59 & 5.2633 E-2 & 2.3753 E-4)";
    case 6:
      return R"(2 & 2,914.82 & 0.26730 & 0.27656 & 2.003 & 1.952 E-3 & 3.674 E-2 & 1.813 E-3 & 2.003 & 1.382 E-3 & 2.600 E-2 & 1.283 E-3
3 & 1,004.56 & 0.25427 & 0.27004 & 3.005 & 6.055 E-4 & 3.026 E-2 & 6.001 E-4 & 3.000 & 4.289 E-4 & 2.141 E-2 & 4.245 E-4
4 & 822.49 & 0.25095 & 0.26838 & 4.009 & 3.280 E-4 & 2.747 E-2 & 3.241 E-4 & 4.003 & 2.324 E-4 & 1.944 E-2 & 2.293 E-4
5 & 599.17 & 0.24497 & 0.26539 & 5.010 & 1.841 E-4 & 2.479 E-2 & 1.762 E-4 & 5.001 & 1.302 E-4 & 1.754 E-2 & 1.247 E-4
6 & 569.30 & 0.24391 & 0.26486 & 6.002 & 1.296 E-4 & 2.349 E-2 & 1.230 E-4 & 6.007 & 9.170 E-5 & 1.662 E-2 & 8.701 E-5
7 & 479.55 & 0.24015 & 0.26299 & 7.021 & 8.850 E-5 & 2.190 E-2 & 8.076 E-5 & 7.006 & 6.260 E-5 & 1.550 E-2 & 5.714 E-5
8 & 470.92 & 0.23974 & 0.26278 & 8.016 & 6.921 E-5 & 2.111 E-2 & 6.285 E-5 & 8.003 & 4.896 E-5 & 1.494 E-2 & 4.446 E-5
9 & 428.75 & 0.23752 & 0.26167 & 9.015 & 5.274 E-5 & 2.012 E-2 & 4.654 E-5 & 9.015 & 3.731 E-5 & 1.423 E-2 & 3.293 E-5
10 & 427.67 & 0.23746 & 0.26164 & 10.002 & 4.380 E-5 & 1.959 E-2 & 3.861 E-5 & 10.014 & 3.098 E-5 & 1.386 E-2 & 2.732 E-5
11 & 394.15 & 0.23545 & 0.26063 & 11.026 & 3.492 E-5 & 1.879 E-2 & 2.990 E-5 & 11.019 & 2.471 E-5 & 1.323 E-2 & 2.115 E-5
12 & 395.45 & 0.23553 & 0.26067 & 12.026 & 3.007 E-5 & 1.840 E-2 & 2.577 E-5 & 12.014 & 2.127 E-5 & 1.302 E-2 & 1.824 E-5
13 & 371.19 & 0.23391 & 0.25987 & 13.009 & 2.492 E-5 & 1.778 E-2 & 2.081 E-5 & 13.017 & 1.763 E-5 & 1.258 E-2 & 1.472 E-5
14 & 373.33 & 0.23406 & 0.25994 & 14.028 & 2.199 E-5 & 1.748 E-2 & 1.841 E-5 & 14.009 & 1.556 E-5 & 1.237 E-2 & 1.302 E-5
15 & 354.71 & 0.23272 & 0.25927 & 15.004 & 1.873 E-5 & 1.698 E-2 & 1.532 E-5 & 15.019 & 1.325 E-5 & 1.201 E-2 & 1.084 E-5
16 & 357.25 & 0.23291 & 0.25937 & 16.002 & 1.682 E-5 & 1.673 E-2 & 1.381 E-5 & 16.019 & 1.190 E-5 & 1.184 E-2 & 9.773 E-6
17 & 342.25 & 0.23176 & 0.25879 & 17.019 & 1.462 E-5 & 1.631 E-2 & 1.176 E-5 & 17.007 & 1.035 E-5 & 1.154 E-2 & 8.321 E-6
18 & 344.86 & 0.23197 & 0.25889 & 18.031 & 1.331 E-5 & 1.611 E-2 & 1.075 E-5 & 18.021 & 9.421 E-6 & 1.140 E-2 & 7.605 E-6
19 & 336.07 & 0.23127 & 0.25854 & 19.035 & 1.168 E-5 & 1.569 E-2 & 9.254 E-6 & 19.025 & 8.264 E-6 & 1.110 E-2 & 6.548 E-6
20 & 337.66 & 0.23140 & 0.25861 & 20.009 & 1.077 E-5 & 1.554 E-2 & 8.565 E-6 & 20.022 & 7.619 E-6 & 1.099 E-2 & 6.061 E-6
21 & 335.48 & 0.23122 & 0.25852 & 654.650 & 1.545 E-5 & 2.416 E-2 & 1.222 E-5 & 519.590 & 1.093 E-5 & 1.708 E-2 & 8.644 E-6)";
    case 7:
      return R"(2 & 46.1831 & 0.25 & 728.705 & 32.6846 & 0.25 & 728.705
3 & 137.697 & 0.25 & 111.618 & 97.4145 & 0.25 & 111.618
4 & 238.328 & 0.25 & 51.4056 & 168.612 & 0.25 & 51.4056
5 & 470.197 & 0.25 & 23.9668 & 332.625 & 0.25 & 23.9668
6 & 640.325 & 0.25 & 15.8139 & 453.008 & 0.25 & 15.8139
7 & 1066.09 & 0.25 & 9.78673 & 754.188 & 0.25 & 9.78673
8 & 1309.41 & 0.25 & 7.35812 & 926.389 & 0.25 & 7.35812
9 & 1886.57 & 0.25 & 5.29321 & 1334.69 & 0.25 & 5.29321
10 & 2166.54 & 0.25 & 4.27670 & 1532.86 & 0.25 & 4.27670
11 & 3045.99 & 0.25 & 3.25744 & 2155.04 & 0.25 & 3.25744
12 & 3364.38 & 0.25 & 2.74618 & 2380.43 & 0.25 & 2.74618
13 & 4520.51 & 0.25 & 2.19639 & 3198.42 & 0.25 & 2.19639
14 & 4868.41 & 0.25 & 1.90474 & 3444.76 & 0.25 & 1.90474
15 & 6321.82 & 0.25 & 1.57649 & 4473.06 & 0.25 & 1.57649
16 & 6680.25 & 0.25 & 1.39551 & 4726.91 & 0.25 & 1.39551
17 & 8456.72 & 0.25 & 1.18426 & 5983.82 & 0.25 & 1.18426
18 & 8822.43 & 0.25 & 1.06438 & 6243.00 & 0.25 & 1.06438
19 & 10248.5 & 0.25 & 0.93095 & 7251.71 & 0.25 & 0.93095
20 & 10779.4 & 0.25 & 0.84415 & 7628.01 & 0.25 & 0.84415
21 to 519 & - & - & - & 13051.2 & 0.25 & 0.76073
21 to 654 & 18457.3 & 0.25 & 0.76073 & - & - & -
>= 520 & - & - & - & 1.047 E10 & 0.23 & 0.76073
>= 655 & 1.480 E10 & 0.23 & 0.76073 & - & - & -)";
    case 8:
      return R"(2 & 174.707 & 728.705 & 123.643 & 728.705
3 & 1125.19 & 111.618 & 797.005 & 111.618
4 & 2752.61 & 51.4056 & 1949.78 & 51.4056
5 & 13667.2 & 23.9668 & 9668.48 & 23.9668
6 & 23258.1 & 15.8139 & 16454.4 & 15.8139
7 & 1.085 E5 & 9.78673 & 76773.3 & 9.78673
8 & 1.542 E5 & 7.35812 & 1.091 E5 & 7.35812
9 & 5.669 E5 & 5.29321 & 4.010 E5 & 5.29321
10 & 6.712 E5 & 4.27670 & 4.749 E5 & 4.27670
11 & 3.219 E6 & 3.25744 & 2.278 E6 & 3.25744
12 & 3.345 E6 & 2.74618 & 2.367 E6 & 2.74618
13 & 1.884 E7 & 2.19639 & 1.333 E7 & 2.19639
14 & 1.733 E7 & 1.90474 & 1.226 E7 & 1.90474
15 & 1.285 E8 & 1.57649 & 9.094 E7 & 1.57649
16 & 1.008 E8 & 1.39551 & 7.133 E7 & 1.39551
17 & 1.238 E9 & 1.18426 & 8.758 E8 & 1.18426
18 & 7.774 E8 & 1.06438 & 5.501 E8 & 1.06438
19 & 6.863 E9 & 0.93095 & 4.856 E9 & 0.93095
20 & 4.601 E9 & 0.84415 & 3.256 E9 & 0.84415
21 & 1.480 E10 & 0.76073 & 1.047 E10 & 0.76073)";
    default:
      return {};
  }
}

}  // namespace cheb

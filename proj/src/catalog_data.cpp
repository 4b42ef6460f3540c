#include "kirkman/catalog_data.hpp"
namespace kirkman::catalog_data {
const char* const kKts9 = R"DATA(
{1,2,3} {1,4,7} {1,5,9} {1,6,8}
{4,5,6} {2,5,8} {2,6,7} {2,4,9}
{7,8,9} {3,6,9} {3,4,8} {3,5,7}
)DATA";
const char* const kKts15 = R"DATA(
{1,2,3} {1,4,5} {1,6,7} {1,8,9} {1,10,11} {1,12,13} {1,14,15}
{4,8,12} {2,8,10} {2,9,11} {2,12,15} {2,13,14} {2,4,6} {2,5,7}
{5,10,14} {3,13,15} {3,12,14} {3,5,6} {3,4,7} {3,9,10} {3,8,11}
{6,11,13} {6,9,14} {4,10,15} {4,11,14} {5,9,12} {5,11,15} {4,9,13}
{7,9,15} {7,11,12} {5,8,13} {7,10,13} {6,8,15} {7,8,14} {6,10,12}
)DATA";
const char* const kKts9Colour3x3 = R"DATA(
1 4 9
2 5 7
3 6 8
)DATA";
const char* const kKts9Colour234 = R"DATA(
1 2
3 5 8
4 6 7 9
)DATA";
const char* const kKts9Colour144 = R"DATA(
1
2 3 5 9
4 6 7 8
)DATA";
const char* const kKts15Rainbow = R"DATA(
1 4 7 13 14
2 5 6 8 9
3 10 11 12 15
)DATA";
const char* const kSigma21 = R"DATA(
m 6
fixed 0_0 4_1 1_2
short 0 1_0 1_1 2_1
short 0 2_0 1_2 2_2
short 3 1_0 1_1 2_1
short 3 2_0 1_2 2_2
short 0 I0 0_2 3_2
short 0 I1 0_0 3_0
short 0 I2 0_1 3_1
long 0 0_0 1_0 3_1
long 0 2_0 4_0 0_2
long 0 1_1 5_1 3_2
long 0 0_1 1_2 5_2
long 0 I1 4_1 4_2
long 0 I2 5_0 2_2
long 0 I0 3_0 2_1
)DATA";
const char* const kSigma33 = R"DATA(
m 10
fixed 0_0 5_1 2_2
short 0 1_0 2_0 1_2
short 0 3_0 1_1 2_1
short 0 4_0 2_2 8_2
short 0 3_1 9_1 4_2
short 5 1_0 2_0 1_2
short 5 3_0 1_1 2_1
short 5 4_0 2_2 8_2
short 5 3_1 9_1 4_2
short 0 I1 0_0 5_0
short 0 I2 0_1 5_1
short 0 I0 0_2 5_2
long 0 0_0 2_0 2_1
long 0 1_0 4_0 7_1
long 0 3_0 7_0 4_1
long 0 5_0 6_2 8_2
long 0 8_0 4_2 5_2
long 0 0_1 8_1 2_2
long 0 6_1 9_1 9_2
long 0 1_1 0_2 7_2
long 0 I1 5_1 3_2
long 0 I2 6_0 1_2
long 0 I0 9_0 3_1
)DATA";
const char* const kSigma39 = R"DATA(
m 12
fixed 0_0 9_1 3_2
short 0 1_0 2_0 1_1
short 0 3_0 4_1 5_1
short 0 4_0 1_2 2_2
short 0 5_0 4_2 9_2
short 0 2_1 9_1 5_2
short 6 1_0 2_0 1_1
short 6 3_0 4_1 5_1
short 6 4_0 1_2 2_2
short 6 5_0 4_2 9_2
short 6 2_1 9_1 5_2
short 0 I1 0_0 6_0
short 0 I2 0_1 6_1
short 0 I0 0_2 6_2
long 0 0_0 2_0 5_1
long 0 1_0 4_0 8_1
long 0 3_0 7_0 1_1
long 0 5_0 10_0 0_2
long 0 6_0 7_2 11_2
long 0 9_0 3_2 5_2
long 0 0_1 9_1 2_2
long 0 2_1 4_1 1_2
long 0 6_1 10_1 10_2
long 0 11_1 6_2 9_2
long 0 I1 3_1 4_2
long 0 I2 8_0 8_2
long 0 I0 11_0 7_1
)DATA";
const char* const kSigma57 = R"DATA(
m 18
fixed 0_0 9_1 10_2
short 0 1_0 2_0 1_1
short 0 3_0 5_0 1_2
short 0 4_0 2_1 5_1
short 0 6_0 3_1 8_1
short 0 7_0 2_2 4_2
short 0 8_0 7_2 8_2
short 0 6_1 7_1 3_2
short 0 13_1 5_2 15_2
short 9 1_0 2_0 1_1
short 9 3_0 5_0 1_2
short 9 4_0 2_1 5_1
short 9 6_0 3_1 8_1
short 9 7_0 2_2 4_2
short 9 8_0 7_2 8_2
short 9 6_1 7_1 3_2
short 9 13_1 5_2 15_2
short 0 I1 0_0 9_0
short 0 I2 0_1 9_1
short 0 I0 0_2 9_2
long 0 0_0 3_0 6_1
long 0 1_0 5_0 9_1
long 0 2_0 8_0 15_1
long 0 4_0 11_0 13_2
long 0 6_0 16_0 9_2
long 0 12_0 17_0 6_2
long 0 7_0 0_1 12_1
long 0 9_0 1_1 3_1
long 0 13_0 1_2 14_2
long 0 14_0 0_2 4_2
long 0 7_1 14_1 7_2
long 0 8_1 16_1 2_2
long 0 13_1 17_1 16_2
long 0 2_1 8_2 11_2
long 0 5_1 3_2 10_2
long 0 10_1 5_2 17_2
long 0 I1 4_1 12_2
long 0 I2 10_0 15_2
long 0 I0 15_0 11_1
)DATA";
const char* const kSigma69 = R"DATA(
m 22
fixed 0_0 14_1 9_2
short 0 1_0 2_0 1_1
short 0 3_0 5_0 6_1
short 0 4_0 7_0 1_2
short 0 6_0 2_1 3_1
short 0 8_0 3_2 4_2
short 0 9_0 2_2 7_2
short 0 10_0 9_2 16_2
short 0 9_1 15_1 6_2
short 0 10_1 18_1 8_2
short 0 16_1 19_1 21_2
short 11 1_0 2_0 1_1
short 11 3_0 5_0 6_1
short 11 4_0 7_0 1_2
short 11 6_0 2_1 3_1
short 11 8_0 3_2 4_2
short 11 9_0 2_2 7_2
short 11 10_0 9_2 16_2
short 11 9_1 15_1 6_2
short 11 10_1 18_1 8_2
short 11 16_1 19_1 21_2
short 0 I1 0_0 11_0
short 0 I2 0_1 11_1
short 0 I0 0_2 11_2
long 0 0_0 4_0 2_1
long 0 1_0 6_0 10_1
long 0 3_0 9_0 14_1
long 0 5_0 20_0 15_1
long 0 7_0 17_0 8_2
long 0 11_0 19_0 19_2
long 0 12_0 21_0 1_2
long 0 14_0 4_1 8_1
long 0 15_0 1_1 6_1
long 0 16_0 0_1 9_1
long 0 8_0 13_2 15_2
long 0 10_0 2_2 14_2
long 0 13_0 3_2 16_2
long 0 11_1 21_1 7_2
long 0 13_1 20_1 20_2
long 0 17_1 19_1 11_2
long 0 5_1 6_2 9_2
long 0 7_1 10_2 18_2
long 0 12_1 5_2 21_2
long 0 16_1 0_2 4_2
long 0 I1 18_1 17_2
long 0 I2 2_0 12_2
long 0 I0 18_0 3_1
)DATA";
const char* const kTv33 = R"DATA(
system 1
P 1 2 4
P 5 6 8
P 18 19 21
P 10 16 28
P 11 26 32
P 9 24 30
P 7 14 23
P 3 12 29
P 15 22 31
P 13 17 27
P 0 20 25
S 2 6 16
S 3 7 17
S 1 6 14
S 3 8 16
S 1 12 23
colour 111221112211122233324433344433444

system 2
P 1 2 4
P 8 9 11
P 18 19 21
P 13 25 31
P 14 26 32
P 12 24 30
P 5 22 29
P 3 20 27
P 0 7 16
P 10 15 23
P 6 17 28
S 1 5 15
S 2 6 16
S 3 7 17
S 2 7 15
S 3 8 16
colour 111221112211122233324433344433444

system 3
P 1 2 4
P 14 15 17
P 0 30 31
P 10 22 28
P 5 11 26
P 6 12 27
P 7 16 23
P 3 20 29
P 9 18 25
P 19 24 32
P 8 13 21
S 1 5 15
S 2 6 16
S 3 7 17
S 3 8 16
S 1 12 23
colour 111221112211122233324343444334443

system 4
P 1 2 4
P 8 9 11
P 24 25 27
P 10 16 28
P 5 17 32
P 12 18 30
P 7 14 31
P 3 20 29
P 6 15 22
P 0 19 23
P 13 21 26
S 2 6 16
S 3 7 17
S 1 6 26
S 2 7 27
S 1 12 23
colour 111221112211122233324343434343444

system 5
P 1 2 4
P 20 21 23
P 12 13 15
P 10 22 28
P 5 11 26
P 3 18 30
P 7 14 31
P 8 17 24
P 0 9 16
P 6 25 29
P 19 27 32
S 2 6 16
S 3 7 17
S 1 6 26
S 2 7 27
S 1 12 23
colour 111221112211122233324343434343444

system 6
P 1 2 4
P 17 18 20
P 24 25 27
P 10 16 28
P 5 11 23
P 3 9 21
P 7 14 31
P 8 15 32
P 6 13 30
P 12 22 26
P 0 19 29
S 3 7 26
S 1 6 14
S 2 7 15
S 3 8 16
S 1 12 23
colour 111221112211122233324433344433444

system 7
P 1 2 4
P 8 9 11
P 18 19 21
P 13 25 31
P 14 26 32
P 12 24 30
P 5 22 29
P 3 20 27
P 0 7 16
P 10 15 23
P 6 17 28
S 1 5 24
S 2 6 25
S 3 7 26
S 2 7 15
S 3 8 16
colour 111221112211122233324433344433444

system 8
P 1 2 4
P 14 15 17
P 0 30 31
P 10 22 28
P 5 11 26
P 6 12 27
P 7 16 23
P 3 20 29
P 9 18 25
P 19 24 32
P 8 13 21
S 1 5 24
S 2 6 25
S 3 7 26
S 3 8 16
S 1 12 23
colour 111221112211122233324433344433444

system 9
P 1 2 4
P 17 18 20
P 24 25 27
P 10 16 28
P 5 11 23
P 3 9 21
P 7 14 31
P 8 15 32
P 6 13 30
P 12 22 26
P 0 19 29
S 3 7 26
S 1 6 26
S 2 7 27
S 3 8 28
S 1 12 23
colour 111221112211122233324343434343444

system 10
P 1 2 5
P 8 9 12
P 24 25 28
P 4 6 18
P 17 19 31
P 11 30 32
P 7 13 22
P 14 20 29
P 3 21 27
P 10 15 23
P 0 16 26
S 2 7 15
S 3 8 16
S 1 8 24
S 3 10 26
S 1 12 23
colour 111122211112222333314423343434444

system 11
P 1 2 5
P 14 15 18
P 9 10 13
P 0 12 31
P 4 23 25
P 8 27 29
P 7 16 22
P 11 20 26
P 3 21 30
P 19 24 32
P 6 17 28
S 3 8 16
S 2 7 15
S 1 8 18
S 2 9 19
S 3 10 20
colour 111122211112222333344431233434444

system 12
P 1 2 5
P 20 21 24
P 9 10 13
P 6 25 27
P 17 19 31
P 11 30 32
P 7 16 22
P 14 23 29
P 3 12 18
P 0 8 28
P 4 15 26
S 3 8 16
S 2 7 15
S 1 8 18
S 2 9 19
S 3 10 20
colour 111122211112222333344431233434444

system 13
P 1 2 5
P 14 15 18
P 9 10 13
P 0 12 31
P 4 23 25
P 8 27 29
P 7 16 22
P 11 20 26
P 3 21 30
P 19 24 32
P 6 17 28
S 3 8 16
S 2 7 15
S 1 8 24
S 2 9 25
S 3 10 26
colour 111122211112222333144323343434444

system 14
P 1 2 5
P 20 21 24
P 9 10 13
P 6 25 27
P 17 19 31
P 11 30 32
P 7 16 22
P 14 23 29
P 3 12 18
P 0 8 28
P 4 15 26
S 3 8 16
S 2 7 15
S 1 8 24
S 2 9 25
S 3 10 26
colour 111122211112222333144323343434444

system 15
P 1 2 5
P 17 18 21
P 9 10 13
P 16 28 30
P 11 23 25
P 15 27 29
P 4 22 31
P 8 14 32
P 0 6 24
P 7 12 20
P 3 19 26
S 3 8 16
S 2 7 15
S 2 9 19
S 3 10 20
S 1 12 23
colour 111122211112221332243343434344443

system 16
P 1 2 5
P 8 9 12
P 24 25 28
P 0 19 31
P 11 13 32
P 6 18 20
P 7 16 22
P 14 23 29
P 3 21 30
P 10 17 27
P 4 15 26
S 3 8 16
S 2 7 15
S 1 6 14
S 3 10 20
S 2 9 19
colour 111122211112221332243343434344443

system 17
P 1 2 5
P 20 21 24
P 15 16 19
P 7 9 28
P 11 13 32
P 6 8 27
P 4 22 31
P 14 23 29
P 3 12 18
P 17 25 30
P 0 10 26
S 3 8 28
S 2 7 27
S 1 8 18
S 3 10 20
S 1 12 23
colour 111122211112222333344431234334444

system 18
P 1 2 5
P 8 9 12
P 24 25 28
P 0 19 31
P 11 13 32
P 6 18 20
P 7 16 22
P 14 23 29
P 3 21 30
P 10 17 27
P 4 15 26
S 3 8 28
S 2 7 27
S 1 6 26
S 3 10 20
S 2 9 19
colour 111122211112222333344431234334444

system 19
P 1 3 16
P 8 10 23
P 0 2 15
P 4 25 28
P 14 17 26
P 6 27 30
P 7 13 21
P 5 11 19
P 18 24 32
P 12 22 29
P 9 20 31
S 3 10 26
S 2 9 25
S 1 2 6
S 2 3 7
S 3 4 8
colour 111112222111322223314343334344444

system 20
P 1 3 16
P 2 4 17
P 9 11 24
P 7 10 19
P 8 29 32
P 15 18 27
P 14 22 28
P 12 20 26
P 0 6 25
P 5 21 31
P 13 23 30
S 3 10 26
S 1 2 6
S 2 3 7
S 3 4 8
S 1 12 23
colour 111112222111322223314343334344444

system 21
P 1 3 16
P 2 4 17
P 9 27 29
P 7 10 19
P 8 11 20
P 12 15 24
P 14 22 28
P 18 26 32
P 5 21 31
P 13 23 30
P 0 6 25
S 1 2 6
S 2 3 7
S 3 4 8
S 1 12 23
S 3 10 26
colour 111112222111322223314343334344444

system 22
P 1 3 16
P 8 26 28
P 9 11 24
P 19 22 31
P 2 5 14
P 6 27 30
P 7 13 32
P 15 23 29
P 4 12 18
P 0 10 17
P 20 21 25
S 3 10 26
S 2 9 25
S 1 2 6
S 3 4 8
S 1 12 23
colour 111112222111322223314343334344444

system 23
P 1 3 16
P 11 13 26
P 15 17 30
P 10 19 22
P 2 23 32
P 12 21 24
P 6 25 31
P 14 20 28
P 0 8 27
P 4 5 9
P 7 18 29
S 3 10 20
S 2 9 19
S 1 8 18
S 3 4 8
S 2 3 7
colour 111112222111322223333444432334444

system 24
P 1 3 16
P 17 19 32
P 9 11 24
P 13 22 25
P 5 8 29
P 18 27 30
P 4 23 31
P 6 14 20
P 7 15 21
P 2 12 28
P 0 10 26
S 3 10 20
S 1 2 6
S 2 3 7
S 3 4 8
S 1 12 23
colour 111112222111322223133434434334444

system 25
P 1 3 16
P 5 23 25
P 0 2 15
P 19 28 31
P 8 11 32
P 6 9 30
P 4 10 29
P 12 20 26
P 13 21 27
P 7 14 24
P 17 18 22
S 3 10 20
S 2 9 19
S 1 2 6
S 3 4 8
S 1 12 23
colour 111112222111322223133434434334444

system 26
P 1 3 16
P 5 7 20
P 15 17 30
P 19 28 31
P 2 11 14
P 12 21 24
P 4 10 29
P 18 26 32
P 0 6 25
P 22 23 27
P 8 9 13
S 3 10 20
S 2 9 19
S 1 8 18
S 3 4 8
S 1 12 23
colour 111112222111322223133434434334444

system 27
P 1 3 16
P 2 20 22
P 12 30 32
P 7 10 31
P 17 26 29
P 6 15 18
P 11 19 25
P 0 8 14
P 13 21 27
P 4 5 9
P 23 24 28
S 3 10 20
S 2 9 19
S 1 8 18
S 3 4 8
S 1 12 23
colour 111112222111322223133434434334444

system 28
P 1 3 21
P 13 26 28
P 5 18 20
P 7 10 19
P 8 29 32
P 12 15 24
P 16 22 30
P 17 23 31
P 0 6 14
P 4 11 27
P 2 9 25
S 3 10 26
S 1 2 6
S 2 3 7
S 3 4 8
S 1 12 23
colour 111112222111322213334342434434434

system 29
P 1 13 19
P 5 11 23
P 3 15 21
P 2 4 7
P 12 14 17
P 0 28 30
P 6 16 25
P 10 20 29
P 8 18 27
P 24 31 32
P 9 22 26
S 0 25 32
S 0 1 26
S 10 23 27
S 11 24 28
S 1 12 23
colour 111112221212121232334433444343434

system 30
P 0 16 32
P 1 10 15
P 2 22 23
P 3 5 9
P 4 12 29
P 6 7 18
P 8 27 30
P 11 14 24
P 13 20 28
P 17 26 31
P 19 21 25
PERM 0..31 fix 32
colour 111111222211332221333433434444244
)DATA";
const char* const kRot33 = R"DATA(
base 1 3 9
base 2 5 27
base 6 15 20
base 7 24 28
base 13 14 26
base inf 0 16
colour 111211312131322322112233123233132
resolution
class 10 17 33 67 87 98 102 124 128 138 162
class 4 25 32 47 96 107 111 131 135 144 166
class 9 20 39 46 60 105 115 119 141 150 168
class 0 35 53 59 72 113 123 127 147 156 170
class 8 16 49 65 71 83 121 134 153 161 172
class 6 24 31 62 77 82 129 140 159 165 174
class 13 22 38 45 74 88 92 136 146 163 175
class 15 28 36 52 58 85 97 101 142 152 167
class 3 30 42 50 70 94 106 110 148 158 169
class 11 19 44 56 63 81 103 114 118 154 171
class 7 26 34 57 68 75 91 122 126 160 173
class 14 23 40 48 69 79 86 100 130 133 164
class 12 29 37 54 61 80 90 95 109 137 139
class 5 27 43 51 66 73 99 104 117 143 145
class 2 21 41 64 78 84 108 112 125 149 151
class 1 18 55 76 89 93 116 120 132 155 157
)DATA";
const char* const kQ13 = R"DATA(
0 1 3 9
1 2 4 10
2 3 5 11
3 4 6 12
4 5 7 0
5 6 8 1
6 7 9 2
7 8 10 3
8 9 11 4
9 10 12 5
10 11 0 6
11 12 1 7
12 0 2 8
colourclass 0 1 2 3 4 5 6
)DATA";
const char* const kGdd44 = R"DATA(
0 0 1 2
0 1 3 1
0 2 2 0
0 3 0 3
1 0 0 1
1 1 2 2
1 2 3 3
1 3 1 0
2 0 2 3
2 1 0 0
2 2 1 1
2 3 3 2
3 0 3 0
3 1 1 3
3 2 0 2
3 3 2 1
)DATA";
const char* const kKq13Colouring = R"DATA(
0 0 0 0 0 0 0 1 1 2 1 2 1 0 2 0 2 2 2 1 2 1 1 2 1 1 2
)DATA";
}  // namespace kirkman::catalog_data

// Generated by scripts/gen_conway_table.py. Do not edit.
#pragma once

#include <string_view>

namespace qcq::detail {

struct ConwayEntry {
    int p;
    int m;
    std::string_view coeffs;  // ascending degree, one digit per coefficient
};

inline constexpr ConwayEntry kConwayTable[] = {
    {2, 1, "11"},
    {2, 2, "111"},
    {2, 3, "1101"},
    {2, 4, "11001"},
    {2, 5, "101001"},
    {2, 6, "1101101"},
    {2, 7, "11000001"},
    {2, 8, "101110001"},
    {2, 9, "1000100001"},
    {2, 10, "11110110001"},
    {2, 11, "101000000001"},
    {2, 12, "1101011100001"},
    {2, 13, "11011000000001"},
    {2, 14, "100101010000001"},
    {2, 15, "1010110000000001"},
    {2, 16, "10110100000000001"},
    {2, 17, "100100000000000001"},
    {2, 18, "1100000000101000001"},
    {2, 19, "11100100000000000001"},
    {2, 20, "110011110110000000001"},
    {2, 21, "1010011000000000000001"},
    {2, 22, "10000110111110000000001"},
    {2, 23, "100001000000000000000001"},
    {2, 24, "1001010101100111100000001"},
    {2, 25, "10100010100000000000000001"},
    {2, 26, "110010111010001000000000001"},
    {2, 27, "1011010101101000000000000001"},
    {2, 28, "10100111000001000000000000001"},
    {2, 29, "101000000000000000000000000001"},
    {2, 30, "1111010100010100110000000000001"},
    {2, 31, "10010000000000000000000000000001"},
    {2, 32, "100110010100000100000000000000001"},
    {2, 33, "1001001010111100000000000000000001"},
    {2, 34, "11101111100110011000000000000000001"},
    {2, 35, "101001010011000000000000000000000001"},
    {2, 36, "1100011010000110010110110000000000001"},
    {2, 37, "11111100000000000000000000000000000001"},
    {2, 38, "111001001110001000000000000000000000001"},
    {2, 39, "1010011101111001000000000000000000000001"},
    {2, 40, "11010100100011011010010100000000000000001"},
    {2, 41, "100100000000000000000000000000000000000001"},
    {2, 42, "1110011001011000001010001110001000000000001"},
    {2, 43, "10011010000000000000000000000000000000000001"},
    {2, 44, "110110000000000011010000100000000000000000001"},
    {2, 45, "1000001000011011010010000000000000000000000001"},
    {2, 46, "10000000000000100100110100000000000000000000001"},
    {2, 47, "100001000000000000000000000000000000000000000001"},
    {2, 48, "1001000110111000010000010100000000000000000000001"},
    {2, 49, "11111010101000000000000000000000000000000000000001"},
    {2, 50, "101010101110111011010000000111000000000000000000001"},
    {2, 51, "1000001001001001100000000000000000000000000000000001"},
    {2, 52, "11001001001000110100010101111000000000000000000000001"},
    {2, 53, "111000100000000000000000000000000000000000000000000001"},
    {2, 54, "1110100100000101111001000101011110100000000000000000001"},
    {2, 55, "10001001011100000000000000000000000000000000000000000001"},
    {2, 56, "101110001101011000010010001000100100000000000000000000001"},
    {2, 57, "1111111010110100100101000000000000000000000000000000000001"},
    {2, 58, "11010111101110001010001011100101000000000000000000000000001"},
    {2, 59, "110111100000000000000000000000000000000000000000000000000001"},
    {2, 60, "1011110010001000010100100110001011101001011011000000000000001"},
    {2, 61, "11100100000000000000000000000000000000000000000000000000000001"},
    {2, 62, "110000100000111011111100111111101000000000000000000000000000001"},
    {2, 63, "1111100011010001110000111000000000000000000000000000000000000001"},
    {2, 64, "11101101001111000010111111100010010000000000000000000000000000001"},
    {2, 65, "110001010110111100000000000000000000000000000000000000000000000001"},
    {2, 66, "1010111100010100100101111001011111100010101001100000000000000000001"},
    {2, 67, "11100100000000000000000000000000000000000000000000000000000000000001"},
    {2, 68, "110011001100011100001010001011100001000000000000000000000000000000001"},
    {2, 69, "1000110011100010011000001000000000000000000000000000000000000000000001"},
    {2, 70, "10110001111111110001110010100110111111010001100000000000000000000000001"},
    {2, 71, "110101000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 72, "1000100010001001001001110101011110010010000010011000000000000000000000001"},
    {2, 73, "10111000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 74, "100100001001110011000100101111111111110000000000000000000000000000000000001"},
    {2, 75, "1100110001001010000000110100010010000000000000000000000000000000000000000001"},
    {2, 76, "11100100000000110001100111010101011111100000000000000000000000000000000000001"},
    {2, 77, "101010000001001100000000000000000000000000000000000000000000000000000000000001"},
    {2, 78, "1100101111010111011101101101100011110101001110100000000000000000000000000000001"},
    {2, 79, "10111000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 80, "101011101101010101001110111001011100001001100010100000000000000000000000000000001"},
    {2, 81, "1001101101110001110001011011000000000000000000000000000000000000000000000000000001"},
    {2, 82, "11111011010111011100011010001000111111000000000000000000000000000000000000000000001"},
    {2, 83, "101010010000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 84, "1010110111011100110011001110100110000101010000111000100001000000000000000000000000001"},
    {2, 85, "10100011000000111010101000000000000000000000000000000000000000000000000000000000000001"},
    {2, 86, "111001111110101010000110010100010000001010010000000000000000000000000000000000000000001"},
    {2, 87, "1101010110111110100010000010101000000000000000000000000000000000000000000000000000000001"},
    {2, 88, "11011101110111110011010010011011010010100100110100000000000000000000000000000000000000001"},
    {2, 89, "100101100000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 90, "1010100100111010101000001110101010101111101011111011010111101111100000000000000000000000001"},
    {2, 91, "11001000011011011100000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 92, "101011000100101111100111100000101100011011111000100000000000000000000000000000000000000000001"},
    {2, 95, "110100101100111011100100100000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 96, "1011101111010111101111011000100011000100100010100010001000011101000000000000000000000000000000001"},
    {2, 97, "10000010000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 98, "110100101011001100100010001110010000000100001010101101101000000000000000000000000000000000000000001"},
    {2, 100, "10010110110100011001101011010011001111000101111110001001110000000000000000000000000000000000000000001"},
    {2, 101, "110000110000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 102, "1000000000100000100000011101101000000101010011010101101111110100000010000000000000000000000000000000001"},
    {2, 103, "10111101000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 107, "111101010000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 108, "1011000111110001001010011010011111110110001111110010001001010111000010100000000000000000000000000000000000001"},
    {2, 109, "10101100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 110, "111000100011011001001000011011000101110100110000100000111111001011001000000000000000000000000000000000000000001"},
    {2, 113, "101101000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 114, "1001000101010101101011000111101100111100101000010010101111001011110011110101010000000000000000000000000000000000001"},
    {2, 115, "11001011011111110110001001000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 119, "111000010000011111101100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 120, "1011110100001110110000000100111100101010111011111011100010101000010110010101000101010110000000000000000000000000000000001"},
    {2, 121, "10100011001111000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 125, "100101100111110111010010000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 126, "1100011010110101110110101100100000001101111111010001100011011010100010110010010101000111010000000000000000000000000000000000001"},
    {2, 127, "11000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {3, 1, "11"},
    {3, 2, "221"},
    {3, 3, "1201"},
    {3, 4, "20021"},
    {3, 5, "120001"},
    {3, 6, "2210201"},
    {3, 7, "10200001"},
    {3, 8, "222012001"},
    {3, 9, "1122000001"},
    {3, 10, "21002220001"},
    {3, 11, "102000000001"},
    {3, 12, "2010111000001"},
    {3, 13, "12000000000001"},
    {3, 14, "201201211200001"},
    {3, 15, "1120010020000001"},
    {3, 16, "21222022000000001"},
    {3, 17, "120000000000000001"},
    {3, 18, "2020212020100000001"},
    {3, 19, "10200000000000000001"},
    {3, 20, "210222001111020000001"},
    {3, 21, "1202012020200000000001"},
    {3, 22, "22010111221200000000001"},
    {3, 23, "110100000000000000000001"},
    {3, 24, "2202202020020010000000001"},
    {3, 25, "12110220000000000000000001"},
    {3, 26, "212100222222210000000000001"},
    {3, 27, "1000000200000000000000000001"},
    {3, 28, "20012020111211200000000000001"},
    {3, 29, "100020000000000000000000000001"},
    {3, 30, "2221221202220210222020000000001"},
    {3, 31, "11010000000000000000000000000001"},
    {3, 32, "210121200002200000000000000000001"},
    {3, 33, "1021221001012000000000000000000001"},
    {3, 34, "20002021020120202210000000000000001"},
    {3, 35, "112020011100000000000000000000000001"},
    {3, 36, "2111022021220220110021000000000000001"},
    {3, 37, "12210000000000000000000000000000000001"},
    {3, 38, "220122202210222210210000000000000000001"},
    {3, 39, "1020101201221000000000000000000000000001"},
    {3, 40, "20121122101202011201000200000000000000001"},
    {3, 41, "120000000000000000000000000000000000000001"},
    {3, 42, "2202010021021121211100210221010000000000001"},
    {3, 43, "11010000000000000000000000000000000000000001"},
    {3, 44, "201122110010102201102112000000000000000000001"},
    {3, 45, "1001120122012011222120000000000000000000000001"},
    {3, 46, "20122101021001220201112000000000000000000000001"},
    {3, 47, "122020000000000000000000000000000000000000000001"},
    {3, 48, "2012102020220210011112102022010200000000000000001"},
    {3, 49, "11001101100000000000000000000000000000000000000001"},
    {3, 50, "221001010112210201100112010200000000000000000000001"},
    {3, 51, "1222102220201000212000000000000000000000000000000001"},
    {3, 52, "20111201200010202221202100221000000000000000000000001"},
    {3, 53, "102220000000000000000000000000000000000000000000000001"},
    {3, 54, "2111201201011000011210222202111022010000000000000000001"},
    {3, 55, "10011210101201100000000000000000000000000000000000000001"},
    {3, 56, "220001020000211001222202212201001000000000000000000000001"},
    {3, 57, "1122221011021022210211000000000000000000000000000000000001"},
    {3, 59, "122100000000000000000000000000000000000000000000000000000001"},
    {3, 60, "2022212020120012200011202022201012112022120010000000000000001"},
    {3, 61, "12210000000000000000000000000000000000000000000000000000000001"},
    {3, 65, "110220022112202201000000000000000000000000000000000000000000000001"},
    {3, 66, "2221020212020020221000101012011210012012120200100000000000000000001"},
    {3, 67, "10200000000000000000000000000000000000000000000000000000000000000001"},
    {3, 71, "122010000000000000000000000000000000000000000000000000000000000000000001"},
    {3, 72, "2202111210212101021102121202011122102211001201120000000000000000000000001"},
    {3, 73, "12000000000000000000000000000000000000000000000000000000000000000000000001"},
    {3, 77, "121101222002200122000000000000000000000000000000000000000000000000000000000001"},
    {3, 79, "12102000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {3, 83, "122001000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {3, 85, "10110121100001222202000000000000000000000000000000000000000000000000000000000000000001"},
    {3, 89, "101200000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {5, 1, "31"},
    {5, 2, "241"},
    {5, 3, "3301"},
    {5, 4, "24401"},
    {5, 5, "340001"},
    {5, 6, "2014101"},
    {5, 7, "33000001"},
    {5, 8, "243010001"},
    {5, 9, "3102000001"},
    {5, 10, "21423300001"},
    {5, 11, "330000000001"},
    {5, 12, "2234401100001"},
    {5, 13, "33400000000001"},
    {5, 14, "210324401000001"},
    {5, 15, "3433020000000001"},
    {5, 16, "21442444100000001"},
    {5, 17, "323000000000000001"},
    {5, 18, "2022012021111000001"},
    {5, 19, "32010000000000000001"},
    {5, 20, "210400302340300000001"},
    {5, 21, "3221222400000000000001"},
    {5, 22, "23340220340310000000001"},
    {5, 23, "302000000000000000000001"},
    {5, 24, "2133204240312404200000001"},
    {5, 25, "34240130000000000000000001"},
    {5, 26, "234311332140220400000000001"},
    {5, 27, "3304320300400000000000000001"},
    {5, 28, "24230202324222200000000000001"},
    {5, 29, "313100000000000000000000000001"},
    {5, 30, "2110143422023440440304000000001"},
    {5, 31, "33000000000000000000000000000001"},
    {5, 33, "3013303241312000000000000000000001"},
    {5, 35, "320213200430000000000000000000000001"},
    {5, 36, "2131040220304123310201101000000000001"},
    {5, 37, "33400000000000000000000000000000000001"},
    {5, 39, "3210230400000030000000000000000000000001"},
    {5, 41, "300400000000000000000000000000000000000001"},
    {5, 42, "2120233014242423300301033404020000000000001"},
    {5, 43, "33000000000000000000000000000000000000000001"},
    {5, 47, "304140000000000000000000000000000000000000000001"},
    {5, 49, "32240101300000000000000000000000000000000000000001"},
    {5, 53, "312200000000000000000000000000000000000000000000000001"},
    {5, 55, "30400212231341400000000000000000000000000000000000000001"},
    {5, 59, "312100000000000000000000000000000000000000000000000000000001"},
    {5, 61, "34400000000000000000000000000000000000000000000000000000000001"},
    {5, 67, "31034000000000000000000000000000000000000000000000000000000000000001"},
    {7, 1, "41"},
    {7, 2, "361"},
    {7, 3, "4061"},
    {7, 4, "34501"},
    {7, 5, "410001"},
    {7, 6, "3645101"},
    {7, 7, "46000001"},
    {7, 8, "326400001"},
    {7, 9, "4601600001"},
    {7, 10, "33214110001"},
    {7, 11, "410000000001"},
    {7, 12, "3050423520001"},
    {7, 13, "40600000000001"},
    {7, 14, "363026050000001"},
    {7, 15, "4214665000000001"},
    {7, 16, "34261435400000001"},
    {7, 17, "410000000000000001"},
    {7, 18, "3260031561621000001"},
    {7, 19, "40500000000000000001"},
    {7, 20, "310303132526100000001"},
};

}  // namespace qcq::detail

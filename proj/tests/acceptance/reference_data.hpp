#pragma once

#include <cstdint>

// Reference digits for the two summary tables, stored as scaled integers
// (4 decimals for the heuristic/J columns, 3 for the certified bounds,
// 5 for the second-order constants). Truncated digits, sign carried by
// the integer.
//
// Four cells of the source data are internally inconsistent and carry a
// flag here; the computed value, the row's own arithmetic, and adjacent
// rows all agree with each other and disagree with the printed digit:
//   q=41  cyc(1e6)  printed 3.9649, computed 3.96489973 (rounds, does not
//                   truncate, to the printed digits)
//   q=47  upp       printed 4.865, computed 4.86536 (directed rounding
//                   gives 4.866; off by one in the last digit)
//   q=131 upp       printed 3.917, computed 3.19604 (digit transposition;
//                   neighbouring widths ~0.65 rule the printed value out)
//   q=139 v         printed 0.00079, computed 0.0000796; the row's own
//                   second-order column implies v in (0.0000723, 0.0000823]
namespace refdata {

enum CellFlag : unsigned {
    kNone = 0,
    kCycRoundsNotTruncates = 1,  // cyc6 cell matches under rounding
    kUppOffByOne = 2,            // upp cell off by one final digit
    kUppMisprint = 4,            // upp cell unreproducible
    kVMisprint = 8,              // v cell unreproducible
};

struct EkRow {
    std::uint64_t q;
    long long cyc5;   // x1e4, truncated
    long long cyc6;   // x1e4, truncated
    long long low;    // x1e3, rounded down
    long long upp;    // x1e3, rounded up
    std::uint64_t x;
    double true_ek;   // truncated to the digits shown in the source
    unsigned flags;
};

inline constexpr EkRow kEkRows[] = {
    {3, 9372, 9431, 945, 946, 300'000, 0.94549, kNone},
    {5, 17148, 17181, 1719, 1722, 300'000, 1.72062, kNone},
    {7, 20799, 20865, 2086, 2090, 1'000'000, 2.08759, kNone},
    {11, 24216, 24116, 2411, 2420, 1'000'000, 2.41542, kNone},
    {13, 26022, 26050, 2601, 2615, 1'000'000, 2.61075, kNone},
    {17, 35662, 35832, 3565, 3592, 1'000'000, 3.58197, kNone},
    {19, 47659, 47876, 4765, 4802, 1'000'000, 4.79040, kNone},
    {23, 26185, 26090, 2594, 2635, 1'000'000, 2.61128, kNone},
    {29, 30870, 30932, 3068, 3132, 1'000'000, 3.09373, kNone},
    {31, 42759, 43078, 4264, 4340, 1'000'000, 4.31444, kNone},
    {37, 43149, 43155, 4262, 4363, 1'000'000, 4.30493, kNone},
    {41, 39661, 39649, 3902, 4020, 1'000'000, 3.97152, kCycRoundsNotTruncates},
    {43, 43408, 43802, 4318, 4446, 1'000'000, 4.37862, kNone},
    {47, 48142, 47925, 4717, 4865, 1'000'000, 4.79939, kUppOffByOne},
    {53, 43029, 43370, 4267, 4392, 2'000'000, 4.33773, kNone},
    {59, 54275, 54285, 5351, 5501, 2'000'000, 5.43351, kNone},
    {61, 50024, 50618, 4971, 5127, 2'000'000, 5.07108, kNone},
    {67, 53340, 52876, 5204, 5384, 2'000'000, 5.29213, kNone},
    {71, 52392, 52336, 5148, 5343, 2'000'000, 5.25525, kNone},
    {73, 39935, 40650, 3957, 4157, 2'000'000, 4.06694, kNone},
    {79, 50581, 50004, 4905, 5132, 2'000'000, 4.99827, kNone},
    {83, 29654, 30295, 2900, 3139, 2'000'000, 3.03313, kNone},
    {89, 41811, 41574, 3963, 4341, 1'000'000, 4.16409, kNone},
    {97, 48455, 48793, 4660, 5090, 1'000'000, 4.89124, kNone},
    {101, 52782, 52883, 5073, 5530, 1'000'000, 5.29701, kNone},
    {103, 51005, 51326, 4899, 5368, 1'000'000, 5.14433, kNone},
    {107, 54382, 55044, 5232, 5728, 1'000'000, 5.45827, kNone},
    {109, 69373, 69267, 6664, 7179, 1'000'000, 6.90663, kNone},
    {113, 39793, 40425, 3759, 4288, 1'000'000, 4.02173, kNone},
    {127, 50040, 50705, 4763, 5390, 1'000'000, 5.08859, kNone},
    {131, 28372, 28495, 2550, 3917, 1'000'000, 2.83682, kUppMisprint},
    {137, 49312, 49205, 4607, 5303, 1'000'000, 4.93700, kNone},
    {139, 58719, 58953, 5546, 6260, 1'000'000, 5.88916, kNone},
    {149, 60227, 59895, 5611, 6396, 1'000'000, 5.98342, kNone},
    {151, 51040, 50604, 4679, 5474, 1'000'000, 5.04201, kNone},
    {157, 74201, 74053, 7007, 7855, 1'000'000, 7.40802, kNone},
    {163, 59314, 59475, 5522, 6409, 1'000'000, 5.92966, kNone},
    {167, 81704, 80129, 7596, 8520, 1'000'000, 8.03300, kNone},
    {173, 34172, 33853, 2924, 3874, 1'000'000, 3.38434, kNone},
};

struct BfqRow {
    std::uint64_t q;
    long long j5;   // x1e4, truncated toward zero
    long long j6;
    long long j7;
    double b_true;  // truncated to 5 decimals
    double v_ref;   // truncated to 5 decimals
    unsigned flags;
};

inline constexpr BfqRow kBfqRows[] = {
    {3, 2430, 2460, 2469, 0.24718, 0.35164, kNone},
    {5, -1042, -1034, -1029, -0.10281, 0.07777, kNone},
    {7, -1347, -1336, -1334, -0.13348, 0.12282, kNone},
    {11, -3419, -3429, -3425, -0.34255, 0.00910, kNone},
    {13, -3268, -3266, -3262, -0.32617, 0.04620, kNone},
    {17, -3584, -3574, -3576, -0.35751, 0.00443, kNone},
    {19, -3087, -3074, -3074, -0.30734, 0.01100, kNone},
    {23, -4627, -4631, -4630, -0.46308, 0.00082, kNone},
    {29, -4703, -4701, -4701, -0.47009, 0.00034, kNone},
    {31, -4014, -4003, -4002, -0.40015, 0.03658, kNone},
    {37, -4589, -4589, -4591, -0.45919, 0.00092, kNone},
    {41, -4797, -4797, -4794, -0.47957, 0.00044, kNone},
    {43, -4755, -4746, -4747, -0.47468, 0.00021, kNone},
    {47, -4740, -4745, -4744, -0.47441, 0.00012, kNone},
    {53, -4956, -4949, -4949, -0.49494, 0.00021, kNone},
    {59, -4847, -4846, -4845, -0.48460, 0.00006, kNone},
    {61, -4934, -4924, -4922, -0.49232, 0.00143, kNone},
    {67, -4970, -4977, -4976, -0.49767, 0.00026, kNone},
    {71, -5025, -5026, -5023, -0.50234, 0.00061, kNone},
    {73, -5211, -5201, -5200, -0.52013, 0.00137, kNone},
    {79, -5125, -5132, -5132, -0.51332, 0.00049, kNone},
    {83, -5416, -5408, -5408, -0.54077, 0.00007, kNone},
    {89, -5299, -5301, -5301, -0.53010, 0.00034, kNone},
    {97, -5270, -5266, -5265, -0.52657, 0.00017, kNone},
    {101, -5248, -5247, -5247, -0.52467, 0.00001, kNone},
    {103, -5276, -5272, -5272, -0.52717, 0.00003, kNone},
    {107, -5262, -5256, -5260, -0.52609, 0.00003, kNone},
    {109, -5133, -5134, -5135, -0.51362, 0.00002, kNone},
    {113, -5420, -5414, -5416, -0.54164, 0.00002, kNone},
    {127, -5318, -5313, -5311, -0.53121, 0.00591, kNone},
    {131, -5556, -5555, -5556, -0.55564, 0.00002, kNone},
    {137, -5411, -5412, -5411, -0.54113, 0.00003, kNone},
    {139, -5348, -5346, -5346, -0.53471, 0.00079, kVMisprint},
    {149, -5367, -5369, -5370, -0.53700, 0.00000, kNone},
    {151, -5433, -5436, -5438, -0.54378, 0.00002, kNone},
    {157, -5297, -5298, -5298, -0.52986, 0.00006, kNone},
    {163, -5407, -5406, -5407, -0.54078, 0.00001, kNone},
    {167, -5281, -5291, -5289, -0.52899, 0.00000, kNone},
    {173, -5575, -5576, -5576, -0.55769, 0.00001, kNone},
};

inline constexpr int kEkRowCount = sizeof(kEkRows) / sizeof(kEkRows[0]);
inline constexpr int kBfqRowCount = sizeof(kBfqRows) / sizeof(kBfqRows[0]);

}  // namespace refdata

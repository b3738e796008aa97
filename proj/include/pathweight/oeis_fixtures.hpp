#pragma once

#include <map>
#include <string>
#include <string_view>

namespace pathweight::oeis {

// Bundled b-file snippets so the default workflow and the test suite run
// without network access. Term values are cross-checked by the formula,
// functional-equation, and brute-force engines before being frozen here.
inline const std::map<std::string, std::string_view>& bundled_fixtures() {
    static const std::map<std::string, std::string_view> fixtures = {
        {"A000108", R"(# A000108: Catalan numbers
0 1
1 1
2 2
3 5
4 14
5 42
6 132
7 429
8 1430
9 4862
10 16796
11 58786
12 208012
)"},
        {"A001764", R"(# A001764: binomial(3n,n)/(2n+1)
0 1
1 1
2 3
3 12
4 55
5 273
6 1428
7 7752
8 43263
9 246675
10 1430715
11 8414640
12 50067108
)"},
        {"A006318", R"(# A006318: large Schroeder numbers
0 1
1 2
2 6
3 22
4 90
5 394
6 1806
7 8558
8 41586
9 206098
10 1037718
11 5293446
12 27297738
)"},
        {"A027307", R"(# A027307: large 2-Schroeder numbers
0 1
1 2
2 10
3 66
4 498
5 4066
6 34970
7 312066
8 2862562
9 26824386
10 255680170
11 2471150402
12 24161357010
)"},
        {"A001006", R"(# A001006: Motzkin numbers
0 1
1 1
2 2
3 4
4 9
5 21
6 51
7 127
8 323
9 835
10 2188
11 5798
12 15511
)"},
        {"A006605", R"(# A006605: 3-Motzkin path counts
0 1
1 1
2 3
3 11
4 46
5 207
6 979
7 4797
8 24138
9 123998
10 647615
11 3428493
12 18356714
)"},
        {"A109081", R"(# A109081: Dyck paths weighted by the product of ascent lengths
0 1
1 1
2 3
3 10
4 37
5 146
6 602
7 2563
8 11181
9 49720
10 224540
11 1027038
12 4748042
)"},
    };
    return fixtures;
}

}  // namespace pathweight::oeis

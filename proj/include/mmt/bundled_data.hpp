#pragma once

// Bundled decomposition data in MMCPD/1 text form, plus the parametric
// 3x3x3 coefficient table. Kept byte-identical to the files under data/.

namespace mmt::data {

inline constexpr const char* strassen222 = R"MMCPD(MMCPD 1
2 2 2 7
A
1 0 1 0 1 -1 0
0 0 0 0 1 0 1
0 1 0 0 0 1 0
1 1 0 1 0 0 -1
B
1 1 0 -1 0 1 0
0 0 1 0 0 1 0
0 0 0 1 0 0 1
1 0 -1 0 1 0 1
C
1 0 0 1 -1 0 1
0 1 0 1 0 0 0
0 0 1 0 1 0 0
1 -1 1 0 0 1 0
)MMCPD";

inline constexpr const char* paper333_symmetric = R"MMCPD(MMCPD 1
3 3 3 23
A
0 1 1 0 0 0 0 -1 0 0 0 0 -1 0 0 0 0 0 0 0 0 1 -1
0 0 0 1 0 0 1 -1 1 0 0 0 1 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 1 1 0 -1 1 0 1 0 0 0 0 -1 0 -1 0 1 0 0 0
1 0 0 0 0 0 1 -1 1 0 0 0 0 0 0 0 0 0 0 1 0 0 0
0 0 0 0 0 0 0 1 -1 0 -1 0 0 1 0 0 0 0 0 -1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0 1 -1 0 0 0 1 -1
0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 1 1 0 1 0 1
0 1 0 0 0 0 0 0 0 1 0 1 0 1 1 -1 -1 0 0 0 0 0 0
B
0 1 0 0 0 -1 0 0 0 0 0 0 0 0 1 -1 1 0 0 0 0 -1 0
0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 -1 1
0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0
0 0 0 1 0 0 0 0 -1 0 -1 0 1 0 0 0 0 0 1 1 0 -1 1
1 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 1 -1 1
0 0 0 -1 0 0 1 0 0 0 0 0 -1 0 0 0 0 0 0 0 0 1 -1
0 0 0 0 0 -1 0 0 0 1 -1 0 0 0 1 -1 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0 1 1 0 1 0 1 0 0 0 0 0 0 0
0 1 1 0 1 0 1 1 -1 -1 0 0 0 0 0 0 0 0 0 0 0 0 0
C
0 1 0 0 0 0 0 1 -1 1 0 0 0 0 -1 0 0 0 0 -1 0 0 0
0 0 0 0 0 0 0 0 0 0 1 0 0 1 -1 1 0 0 0 1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 1 0 0 0 0
0 0 0 -1 0 1 0 0 0 0 0 1 1 0 -1 1 0 1 0 0 0 0 -1
1 0 0 0 0 1 0 0 0 0 0 0 0 1 -1 1 0 0 0 0 0 0 0
0 0 0 0 0 -1 0 0 0 0 0 0 0 0 1 -1 0 -1 0 0 1 0 0
0 0 1 -1 0 0 0 1 -1 0 0 0 0 0 0 0 0 0 0 -1 0 0 0
0 0 0 1 1 0 1 0 1 0 0 0 0 0 0 0 0 0 0 1 0 0 0
0 1 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 1 1 -1
)MMCPD";

inline constexpr const char* appendix_e_336_A = R"MMCPD(MMCPD 1
3 3 6 40
A
1/2 1/2 -1/2 -1/2 1/2 -1/2 -1/2 1/2 -1/2 -1/2 1/2 1/2 -1/2 -1/2 -1/2 1/2 0 1/2 0 0 -1/2 -1/2 0 0 -1/2 0 1/2 -1/2 1/2 0 0 1/2 1/2 1/2 0 1/2 0 0 0 -1/2
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1/2 0 1/2 0 0 0 0 1/2 -1/2 0 0 0 0 0 0 -1/2 0 1/2 1/2 0 0 -1/2 0
1/2 -1/2 -1/2 1/2 1/2 1/2 -1/2 1/2 1/2 -1/2 1/2 1/2 1/2 1/2 1/2 -1/2 0 0 0 1/2 1/2 -1/2 0 0 0 1/2 1/2 -1/2 -1/2 0 0 -1/2 0 -1/2 -1/2 0 0 0 -1/2 -1/2
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1/2 0 -1/2 0 1/2 -1/2 0 0 0 0 0 0 0 0 0 0 0 1/2 0 0 -1/2 -1/2 0 1/2
1/2 1/2 1/2 -1/2 1/2 1/2 1/2 1/2 1/2 1/2 -1/2 1/2 -1/2 1/2 1/2 1/2 -1/2 0 1/2 1/2 0 0 -1/2 -1/2 0 1/2 0 0 0 1/2 -1/2 0 0 0 1/2 0 1/2 -1/2 1/2 0
1/2 -1/2 -1/2 -1/2 -1/2 -1/2 1/2 -1/2 -1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 0 0 0 1/2 -1/2 -1/2 1/2 -1/2 0 -1/2 0 0 0 -1/2 -1/2 0 0 -1/2 -1/2 0 0 0 1/2 1/2
-1/2 -1/2 1/2 1/2 -1/2 -1/2 -1/2 1/2 1/2 1/2 1/2 1/2 -1/2 -1/2 1/2 1/2 -1/2 -1/2 -1/2 0 0 0 0 0 1/2 0 -1/2 -1/2 1/2 0 0 -1/2 1/2 0 0 1/2 1/2 1/2 0 0
1/2 1/2 1/2 1/2 -1/2 1/2 1/2 1/2 -1/2 -1/2 1/2 -1/2 1/2 -1/2 1/2 1/2 -1/2 -1/2 1/2 0 0 0 -1/2 -1/2 -1/2 0 0 0 0 -1/2 1/2 0 -1/2 0 0 1/2 -1/2 1/2 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1/2 -1/2 0 0 -1/2 -1/2 -1/2 1/2 1/2 1/2 0 0 0 0 0 0 0 0
B
0 0 -1/2 0 0 -1/2 -1/2 0 -1/2 -1/2 -1/2 0 0 1/2 1/2 0 -1/2 -1/2 -1/2 1/2 1/2 1/2 0 0 1/2 -1/2 0 0 0 0 0 0 -1/2 1/2 -1/2 -1/2 -1/2 1/2 1/2 -1/2
-1/2 0 0 -1/2 0 -1/2 0 1/2 0 1/2 1/2 0 -1/2 0 1/2 0 -1/2 0 -1/2 0 1/2 -1/2 0 0 0 0 0 0 0 0 0 0 0 1/2 0 0 1/2 -1/2 0 1/2
0 -1/2 1/2 0 -1/2 0 1/2 0 -1/2 0 0 -1/2 0 1/2 0 1/2 1/2 0 1/2 0 1/2 -1/2 0 0 0 0 0 0 0 0 0 0 0 1/2 0 0 -1/2 1/2 0 1/2
0 -1/2 0 0 1/2 1/2 0 0 0 -1/2 1/2 -1/2 0 0 1/2 -1/2 -1/2 0 1/2 0 -1/2 -1/2 1/2 1/2 0 0 1/2 1/2 1/2 1/2 1/2 1/2 0 1/2 0 0 -1/2 -1/2 0 -1/2
1/2 -1/2 0 -1/2 1/2 0 0 -1/2 0 0 0 1/2 -1/2 0 0 1/2 1/2 -1/2 1/2 1/2 1/2 1/2 0 0 1/2 -1/2 0 0 0 0 0 0 -1/2 1/2 -1/2 -1/2 1/2 -1/2 1/2 -1/2
1/2 0 -1/2 -1/2 0 0 1/2 1/2 -1/2 0 0 0 1/2 -1/2 0 0 -1/2 0 1/2 0 1/2 1/2 1/2 1/2 0 0 1/2 1/2 1/2 1/2 1/2 1/2 0 -1/2 0 0 -1/2 -1/2 0 1/2
0 0 -1/2 0 0 1/2 1/2 0 1/2 1/2 -1/2 0 0 1/2 1/2 0 -1/2 -1/2 1/2 1/2 -1/2 1/2 0 0 -1/2 1/2 0 0 0 0 0 0 1/2 1/2 -1/2 -1/2 1/2 1/2 -1/2 1/2
0 1/2 1/2 0 -1/2 0 -1/2 0 1/2 0 0 1/2 0 1/2 0 1/2 0 1/2 0 1/2 0 0 -1/2 -1/2 -1/2 1/2 -1/2 -1/2 -1/2 -1/2 -1/2 -1/2 -1/2 0 1/2 -1/2 0 0 1/2 0
1/2 0 0 -1/2 0 1/2 0 1/2 0 -1/2 1/2 0 1/2 0 1/2 0 0 -1/2 0 1/2 0 0 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 0 1/2 1/2 0 0 1/2 0
1/2 0 1/2 1/2 0 0 1/2 -1/2 -1/2 0 0 0 1/2 1/2 0 0 0 1/2 0 1/2 0 0 0 0 1/2 -1/2 0 0 0 0 0 0 1/2 0 1/2 -1/2 0 0 -1/2 0
-1/2 1/2 0 -1/2 1/2 0 0 -1/2 0 0 0 -1/2 1/2 0 0 1/2 1/2 -1/2 -1/2 -1/2 1/2 -1/2 0 0 -1/2 -1/2 0 0 0 0 0 0 1/2 -1/2 1/2 -1/2 -1/2 -1/2 1/2 -1/2
0 -1/2 0 0 -1/2 1/2 0 0 0 -1/2 -1/2 -1/2 0 0 -1/2 1/2 0 1/2 0 -1/2 0 0 0 0 1/2 1/2 0 0 0 0 0 0 1/2 0 -1/2 -1/2 0 0 1/2 0
-1/2 -1/2 0 -1/2 -1/2 0 0 1/2 0 0 0 -1/2 -1/2 0 0 1/2 0 0 0 0 0 0 1/2 -1/2 0 0 -1/2 1/2 -1/2 -1/2 1/2 1/2 0 0 0 0 0 0 0 0
0 -1/2 -1/2 0 1/2 0 -1/2 0 -1/2 0 0 1/2 0 1/2 0 1/2 0 -1/2 0 1/2 0 0 1/2 -1/2 1/2 -1/2 1/2 -1/2 -1/2 1/2 -1/2 1/2 -1/2 0 -1/2 -1/2 0 0 1/2 0
1/2 0 0 -1/2 0 -1/2 0 -1/2 0 -1/2 -1/2 0 -1/2 0 1/2 0 0 -1/2 0 1/2 0 0 -1/2 1/2 1/2 -1/2 1/2 -1/2 -1/2 -1/2 1/2 1/2 -1/2 0 -1/2 -1/2 0 0 1/2 0
0 1/2 0 0 1/2 -1/2 0 0 0 -1/2 1/2 -1/2 0 0 -1/2 1/2 1/2 0 -1/2 0 1/2 -1/2 -1/2 -1/2 0 0 1/2 1/2 -1/2 1/2 1/2 -1/2 0 -1/2 0 0 -1/2 -1/2 0 -1/2
0 0 1/2 0 0 -1/2 1/2 0 -1/2 1/2 1/2 0 0 1/2 1/2 0 0 0 0 0 0 0 -1/2 1/2 0 0 -1/2 1/2 -1/2 1/2 -1/2 1/2 0 0 0 0 0 0 0 0
1/2 0 -1/2 1/2 0 0 1/2 1/2 1/2 0 0 0 -1/2 1/2 0 0 -1/2 0 1/2 0 -1/2 1/2 1/2 1/2 0 0 1/2 1/2 -1/2 -1/2 -1/2 -1/2 0 1/2 0 0 1/2 1/2 0 1/2
C
-1/2 1/2 0 -1/2 -1/2 0 0 1/2 0 0 0 -1/2 -1/2 0 0 -1/2 -1/2 -1/2 1/2 1/2 -1/2 -1/2 0 0 -1/2 -1/2 0 0 0 0 0 0 -1/2 1/2 -1/2 -1/2 1/2 1/2 1/2 1/2
-1/2 1/2 0 1/2 1/2 0 0 -1/2 0 0 0 -1/2 -1/2 0 0 1/2 1/2 1/2 1/2 1/2 1/2 -1/2 0 0 -1/2 1/2 0 0 0 0 0 0 -1/2 1/2 -1/2 1/2 1/2 -1/2 -1/2 -1/2
0 0 -1/2 0 0 1/2 1/2 0 -1/2 -1/2 -1/2 0 0 -1/2 1/2 0 0 0 0 0 0 0 1/2 1/2 0 0 1/2 -1/2 1/2 -1/2 1/2 1/2 0 0 0 0 0 0 0 0
-1/2 0 0 1/2 0 1/2 0 1/2 0 -1/2 1/2 0 1/2 0 -1/2 0 0 1/2 0 1/2 0 0 1/2 -1/2 -1/2 -1/2 1/2 1/2 1/2 1/2 1/2 -1/2 1/2 0 1/2 -1/2 0 0 -1/2 0
0 1/2 1/2 0 -1/2 0 -1/2 0 1/2 0 0 1/2 0 1/2 0 1/2 1/2 0 1/2 0 1/2 1/2 0 0 0 0 0 0 0 0 0 0 0 1/2 0 0 -1/2 1/2 0 1/2
1/2 0 0 -1/2 0 1/2 0 1/2 0 1/2 1/2 0 1/2 0 1/2 0 0 -1/2 0 -1/2 0 0 1/2 1/2 1/2 -1/2 -1/2 1/2 1/2 1/2 -1/2 1/2 1/2 0 1/2 -1/2 0 0 1/2 0
0 -1/2 -1/2 0 -1/2 0 -1/2 0 1/2 0 0 -1/2 0 -1/2 0 1/2 0 -1/2 0 1/2 0 0 1/2 -1/2 1/2 -1/2 1/2 1/2 1/2 1/2 1/2 -1/2 -1/2 0 1/2 1/2 0 0 -1/2 0
1/2 0 0 1/2 0 1/2 0 1/2 0 -1/2 -1/2 0 -1/2 0 1/2 0 -1/2 0 -1/2 0 1/2 1/2 0 0 0 0 0 0 0 0 0 0 0 1/2 0 0 1/2 -1/2 0 1/2
0 1/2 1/2 0 1/2 0 -1/2 0 -1/2 0 0 -1/2 0 -1/2 0 1/2 0 1/2 0 1/2 0 0 -1/2 -1/2 -1/2 1/2 -1/2 1/2 1/2 -1/2 1/2 1/2 -1/2 0 -1/2 1/2 0 0 -1/2 0
0 -1/2 0 0 1/2 -1/2 0 0 0 1/2 1/2 -1/2 0 0 -1/2 -1/2 0 1/2 0 1/2 0 0 0 0 1/2 1/2 0 0 0 0 0 0 -1/2 0 1/2 -1/2 0 0 1/2 0
1/2 0 1/2 -1/2 0 0 1/2 -1/2 -1/2 0 0 0 -1/2 1/2 0 0 1/2 0 -1/2 0 -1/2 1/2 -1/2 1/2 0 0 -1/2 -1/2 -1/2 -1/2 -1/2 1/2 0 1/2 0 0 1/2 1/2 0 -1/2
1/2 0 1/2 1/2 0 0 1/2 -1/2 1/2 0 0 0 1/2 -1/2 0 0 1/2 0 -1/2 0 1/2 1/2 -1/2 1/2 0 0 -1/2 -1/2 1/2 1/2 1/2 -1/2 0 -1/2 0 0 -1/2 -1/2 0 -1/2
0 0 -1/2 0 0 -1/2 -1/2 0 -1/2 -1/2 1/2 0 0 1/2 1/2 0 -1/2 -1/2 1/2 -1/2 -1/2 -1/2 0 0 -1/2 1/2 0 0 0 0 0 0 -1/2 1/2 1/2 -1/2 1/2 1/2 -1/2 1/2
0 0 -1/2 0 0 1/2 1/2 0 1/2 1/2 1/2 0 0 1/2 1/2 0 -1/2 -1/2 -1/2 -1/2 1/2 -1/2 0 0 1/2 -1/2 0 0 0 0 0 0 1/2 1/2 1/2 -1/2 -1/2 1/2 1/2 -1/2
-1/2 1/2 0 -1/2 -1/2 0 0 -1/2 0 0 0 1/2 1/2 0 0 1/2 0 0 0 0 0 0 -1/2 -1/2 0 0 1/2 -1/2 1/2 1/2 -1/2 1/2 0 0 0 0 0 0 0 0
1/2 0 1/2 1/2 0 0 -1/2 1/2 1/2 0 0 0 -1/2 1/2 0 0 0 1/2 0 -1/2 0 0 0 0 1/2 -1/2 0 0 0 0 0 0 -1/2 0 -1/2 -1/2 0 0 -1/2 0
0 -1/2 0 0 -1/2 1/2 0 0 0 -1/2 1/2 -1/2 0 0 -1/2 1/2 1/2 0 -1/2 0 1/2 -1/2 1/2 -1/2 0 0 1/2 1/2 1/2 1/2 1/2 -1/2 0 -1/2 0 0 1/2 1/2 0 1/2
0 -1/2 0 0 1/2 1/2 0 0 0 1/2 -1/2 1/2 0 0 -1/2 1/2 1/2 0 -1/2 0 1/2 1/2 1/2 -1/2 0 0 -1/2 -1/2 1/2 -1/2 -1/2 -1/2 0 -1/2 0 0 -1/2 -1/2 0 -1/2
)MMCPD";

inline constexpr const char* appendix_e_336_B = R"MMCPD(MMCPD 1
3 3 6 40
A
0 1/2 0 -1/2 0 -1/2 0 0 -1/2 0 0 0 -1/2 -1/2 -1/2 1/2 0 0 0 -1/2 -1/2 0 0 0 -1/2 0 0 0 1/2 0 0 1/2 1/2 1/2 0 0 0 0 1/2 0
1/2 0 -1/2 0 1/2 0 -1/2 1/2 0 -1/2 1/2 1/2 0 0 0 0 0 1/2 0 1/2 0 -1/2 0 0 0 0 1/2 -1/2 0 0 0 0 0 0 0 1/2 0 0 -1/2 -1/2
0 -1/2 0 1/2 0 1/2 0 0 1/2 0 0 0 1/2 1/2 1/2 -1/2 0 -1/2 0 0 1/2 0 0 0 0 1/2 0 0 -1/2 0 0 -1/2 0 -1/2 -1/2 -1/2 0 0 0 0
-1/2 0 0 1/2 0 0 -1/2 0 0 -1/2 0 -1/2 0 -1/2 -1/2 -1/2 0 0 -1/2 -1/2 1/2 0 0 1/2 0 0 0 0 0 0 1/2 0 0 1/2 0 0 -1/2 0 -1/2 0
1/2 0 0 -1/2 0 0 1/2 0 0 1/2 0 1/2 0 1/2 1/2 1/2 -1/2 0 0 1/2 0 -1/2 0 -1/2 0 0 0 0 0 0 -1/2 0 0 0 0 0 0 -1/2 1/2 1/2
0 -1/2 -1/2 0 -1/2 -1/2 0 -1/2 -1/2 0 1/2 0 1/2 0 0 0 1/2 0 0 0 -1/2 0 1/2 0 0 -1/2 0 0 0 -1/2 0 0 0 -1/2 -1/2 0 0 1/2 0 0
-1/2 -1/2 0 0 0 -1/2 -1/2 0 1/2 1/2 0 1/2 -1/2 0 0 0 0 0 -1/2 0 0 0 0 1/2 1/2 0 0 0 1/2 0 -1/2 -1/2 1/2 0 0 0 1/2 0 0 0
0 0 1/2 1/2 -1/2 0 0 1/2 0 0 1/2 0 0 -1/2 1/2 1/2 -1/2 -1/2 0 0 0 0 0 -1/2 0 0 -1/2 -1/2 0 0 1/2 0 0 0 0 1/2 0 1/2 0 0
0 0 -1/2 -1/2 1/2 0 0 -1/2 0 0 -1/2 0 0 1/2 -1/2 -1/2 1/2 1/2 0 0 0 0 1/2 0 0 0 0 0 -1/2 1/2 0 1/2 0 0 0 -1/2 0 -1/2 0 0
B
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 -1 0 0 0 0 0 0 0 -1 0 0 0 -1 0 0 0
0 -1 0 0 0 -1 0 0 -1 0 0 0 -1 0 0 0 0 0 0 0 1 0 0 0 1 -1 0 0 0 0 0 0 -1 1 -1 0 0 0 0 0
1 0 0 0 0 0 -1 0 0 -1 0 1 0 0 0 0 0 0 0 1 0 1 0 0 1 0 0 0 0 0 0 0 -1 0 0 0 0 0 1 -1
1 0 0 0 0 0 1 0 0 1 0 1 0 0 0 0 0 0 1 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 -1 1
0 -1 0 0 0 1 0 0 1 0 0 0 -1 0 0 0 0 0 1 0 -1 0 0 0 0 1 0 0 0 0 0 0 0 1 -1 0 1 0 0 0
0 0 -1 -1 1 0 0 1 0 0 1 0 0 -1 1 -1 -1 -1 0 0 0 0 1 1 0 0 1 1 1 1 1 1 0 0 0 1 0 -1 0 0
1 0 0 0 0 0 1 0 0 -1 0 -1 0 0 0 0 0 0 1 0 0 0 0 1 0 0 1 1 0 0 1 0 0 0 0 0 -1 0 0 0
0 -1 0 -1 0 -1 0 0 -1 0 0 0 -1 1 1 1 0 -1 0 1 1 0 0 0 1 -1 0 0 -1 0 0 1 -1 1 -1 -1 0 0 1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 -1 1 0 0 0 0 0 0 0 0 0 0 0 -1
1 0 0 0 0 0 1 0 0 1 0 1 0 0 0 0 0 0 1 0 0 1 0 1 0 0 0 0 0 0 -1 0 0 0 0 0 1 0 0 1
0 0 1 0 1 0 0 -1 0 0 1 0 0 0 0 0 1 0 0 0 0 -1 -1 0 0 0 0 0 0 1 0 0 0 0 0 0 0 -1 0 -1
0 0 -1 0 1 0 0 1 0 0 1 0 0 0 0 0 -1 0 0 0 0 0 1 0 0 0 1 1 0 1 0 0 0 0 0 0 0 -1 0 0
0 1 0 0 0 -1 0 0 1 0 0 0 -1 0 0 0 0 0 0 0 0 0 -1 0 -1 0 0 0 -1 -1 0 -1 -1 0 0 0 0 0 0 0
0 -1 0 0 0 -1 0 0 -1 0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 1 -1 0 0 -1 0 0 1 -1 0 -1 0 0 0 0 0
0 0 1 0 -1 0 0 1 0 0 1 0 0 0 0 0 0 1 0 0 0 0 0 0 0 1 -1 1 0 0 0 0 0 0 1 1 0 0 0 0
1 0 0 1 0 0 1 0 0 1 0 1 0 1 1 -1 -1 0 1 1 -1 1 0 1 0 0 0 0 0 0 -1 0 0 1 0 0 1 1 -1 1
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0 1 0 0 0 1 0 0 0 0 -1 0 0 0 0 0
0 0 -1 0 1 0 0 1 0 0 1 0 0 0 0 0 0 -1 0 0 0 0 1 0 0 0 1 1 0 1 0 0 0 0 0 1 0 0 0 0
C
1/2 -1/2 0 0 0 -1/2 -1/2 0 1/2 1/2 0 -1/2 -1/2 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 -1 0 0 0 0 0 0 0
1/2 -1/2 0 0 0 1/2 1/2 0 -1/2 -1/2 0 -1/2 -1/2 0 0 0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0
0 0 1/2 1/2 1/2 0 0 -1/2 0 0 -1/2 0 0 -1/2 -1/2 1/2 1/2 1/2 -1/2 1/2 1/2 1/2 -1/2 -1/2 -1/2 1/2 -1/2 -1/2 1/2 -1/2 1/2 -1/2 -1/2 -1/2 -1/2 1/2 -1/2 -1/2 -1/2 -1/2
-1/2 0 -1/2 0 -1/2 0 -1/2 1/2 0 -1/2 1/2 -1/2 0 0 0 0 -1/2 -1/2 1/2 1/2 -1/2 -1/2 1/2 -1/2 -1/2 -1/2 1/2 1/2 1/2 1/2 1/2 -1/2 -1/2 1/2 1/2 -1/2 1/2 1/2 -1/2 1/2
0 1/2 0 1/2 0 1/2 0 0 1/2 0 0 0 -1/2 1/2 1/2 1/2 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0
0 1/2 0 -1/2 0 1/2 0 0 -1/2 0 0 0 1/2 -1/2 1/2 1/2 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0
0 1/2 0 -1/2 0 -1/2 0 0 -1/2 0 0 0 -1/2 1/2 1/2 -1/2 -1/2 -1/2 1/2 -1/2 -1/2 -1/2 -1/2 1/2 -1/2 1/2 -1/2 -1/2 -1/2 -1/2 -1/2 1/2 -1/2 1/2 -1/2 -1/2 1/2 1/2 1/2 1/2
-1/2 0 -1/2 0 1/2 0 1/2 -1/2 0 1/2 1/2 -1/2 0 0 0 0 0 0 0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1
-1/2 0 -1/2 0 -1/2 0 1/2 -1/2 0 -1/2 -1/2 1/2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 -1 0 0 0 0 0 0 0 0 0 0 0 0
1/2 0 0 1/2 0 0 -1/2 0 0 -1/2 0 1/2 0 1/2 1/2 1/2 0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0
0 -1/2 -1/2 0 -1/2 1/2 0 1/2 1/2 0 1/2 0 1/2 0 0 0 -1/2 -1/2 -1/2 -1/2 1/2 -1/2 1/2 -1/2 1/2 -1/2 1/2 1/2 1/2 1/2 1/2 -1/2 1/2 -1/2 1/2 -1/2 -1/2 1/2 1/2 1/2
-1/2 0 0 -1/2 0 0 -1/2 0 0 1/2 0 1/2 0 1/2 -1/2 1/2 0 0 0 0 0 0 0 -1 0 0 0 0 0 0 -1 0 0 0 0 0 0 0 0 0
0 -1/2 -1/2 0 1/2 -1/2 0 -1/2 -1/2 0 1/2 0 1/2 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 1 0 0 0 0 0
1/2 0 0 -1/2 0 0 1/2 0 0 1/2 0 1/2 0 1/2 1/2 -1/2 -1/2 -1/2 -1/2 -1/2 -1/2 1/2 -1/2 1/2 1/2 -1/2 -1/2 -1/2 -1/2 -1/2 -1/2 1/2 1/2 1/2 1/2 -1/2 -1/2 1/2 1/2 -1/2
0 1/2 1/2 0 -1/2 -1/2 0 -1/2 1/2 0 1/2 0 1/2 0 0 0 0 0 0 0 0 0 -1 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0
0 0 1/2 1/2 1/2 0 0 1/2 0 0 1/2 0 0 1/2 -1/2 -1/2 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0 0
0 0 1/2 -1/2 -1/2 0 0 -1/2 0 0 1/2 0 0 1/2 -1/2 1/2 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0
1/2 -1/2 0 0 0 1/2 1/2 0 1/2 1/2 0 1/2 1/2 0 0 0 1/2 -1/2 -1/2 -1/2 1/2 1/2 1/2 1/2 1/2 -1/2 -1/2 -1/2 1/2 1/2 -1/2 -1/2 1/2 -1/2 1/2 -1/2 -1/2 -1/2 1/2 -1/2
)MMCPD";

inline constexpr const char* double_strassen444 = R"MMCPD(MMCPD 1
4 4 4 49
A
1 0 1 0 1 -1 0 0 0 0 0 0 0 0 1 0 1 0 1 -1 0 0 0 0 0 0 0 0 1 0 1 0 1 -1 0 -1 0 -1 0 -1 1 0 0 0 0 0 0 0 0
0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 -1 0 -1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 1 -1 0 0 0 0 0 0 0 0 1 0 1 0 1 -1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 1
0 1 0 0 0 1 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0 0 -1 0 0 0 -1 0 0 0 0 0 0 0 0
1 1 0 1 0 0 -1 0 0 0 0 0 0 0 1 1 0 1 0 0 -1 0 0 0 0 0 0 0 1 1 0 1 0 0 -1 -1 -1 0 -1 0 0 1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 1 0 0 -1 0 0 0 0 0 0 0 1 1 0 1 0 0 -1
0 0 0 0 0 0 0 1 0 1 0 1 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 1 -1 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0
1 0 1 0 1 -1 0 1 0 1 0 1 -1 0 0 0 0 0 0 0 0 1 0 1 0 1 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0 -1 0 -1 1 0
0 0 0 0 1 0 1 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0 -1
0 0 0 0 0 0 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1 1 0 1 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 1 0 0 -1 0 0 0 0 0 0 0
0 1 0 0 0 1 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0 -1 0
1 1 0 1 0 0 -1 1 1 0 1 0 0 -1 0 0 0 0 0 0 0 1 1 0 1 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 -1 0 -1 0 0 1
B
1 1 0 -1 0 1 0 1 1 0 -1 0 1 0 0 0 0 0 0 0 0 -1 -1 0 1 0 -1 0 0 0 0 0 0 0 0 1 1 0 -1 0 1 0 0 0 0 0 0 0 0
0 0 1 0 0 1 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 -1 0 0 -1 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 -1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 -1 0 1 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0
0 0 0 1 0 0 1 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 -1 0 0 -1 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0
1 0 -1 0 1 0 1 1 0 -1 0 1 0 1 0 0 0 0 0 0 0 -1 0 1 0 -1 0 -1 0 0 0 0 0 0 0 1 0 -1 0 1 0 1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 -1 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 -1 0 1 0 1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 -1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 -1 0 1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0
1 1 0 -1 0 1 0 0 0 0 0 0 0 0 -1 -1 0 1 0 -1 0 0 0 0 0 0 0 0 1 1 0 -1 0 1 0 0 0 0 0 0 0 0 1 1 0 -1 0 1 0
0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 -1 0 0 -1 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 -1 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 -1 0 1 0 1
0 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 -1 0 0 -1 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 1 0 0 1
1 0 -1 0 1 0 1 0 0 0 0 0 0 0 -1 0 1 0 -1 0 -1 0 0 0 0 0 0 0 1 0 -1 0 1 0 1 0 0 0 0 0 0 0 1 0 -1 0 1 0 1
C
1 0 0 1 -1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 -1 0 1 -1 0 0 -1 1 0 -1 0 0 0 0 0 0 0 1 0 0 1 -1 0 1
0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 -1 0 -1 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0
0 0 0 0 0 0 0 1 0 0 1 -1 0 1 0 0 0 0 0 0 0 1 0 0 1 -1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 -1 0 -1 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0
1 -1 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 -1 1 0 0 1 0 -1 1 -1 0 0 -1 0 0 0 0 0 0 0 0 1 -1 1 0 0 1 0
0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1 -1 1 0 0 1 0 0 0 0 0 0 0 0 1 -1 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 -1 0 1 0 0 0 0 0 0 0 1 0 0 1 -1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
1 0 0 1 -1 0 1 -1 0 0 -1 1 0 -1 1 0 0 1 -1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 -1 0 1 0 0 0 0 0 0 0
0 1 0 1 0 0 0 0 -1 0 -1 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 -1 1 0 0 1 0 0 0 0 0 0 0 0 1 -1 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 1 0 1 0 0 0 0 -1 0 -1 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0
1 -1 1 0 0 1 0 -1 1 -1 0 0 -1 0 1 -1 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 -1 1 0 0 1 0 0 0 0 0 0 0 0
)MMCPD";

// param333 entry: value = (num/den) * a^ea * b^eb * d^ed * f^ef, row-major 9x23.
struct ParamEntry { long num, den; int ea, eb, ed, ef; };
inline constexpr ParamEntry param333_table[9][23] = {
    {{1,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,0}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}},
    {{0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,1,0,0}, {-1,1,0,0,-1,-1}, {1,1,0,0,1,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,-1,-1}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,1,0,-1}, {0,1,0,0,0,0}, {0,1,0,0,0,0}},
    {{0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,1,0,0,0}, {-1,1,1,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {-1,1,0,1,0,0}, {1,1,1,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {-1,1,0,0,1,0}},
    {{0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,1}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {-1,1,0,0,-1,0}, {1,1,0,0,1,1}, {0,1,0,0,0,0}, {1,1,0,-1,-1,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {-1,1,0,-1,-1,0}, {0,1,0,0,0,0}},
    {{0,1,0,0,0,0}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,1,1}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,2,1}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {-1,1,0,-1,0,0}, {0,1,0,0,0,0}},
    {{0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {-1,1,0,1,0,0}, {0,1,0,0,0,0}, {1,1,0,1,-1,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {-1,1,0,0,-1,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,0}},
    {{0,1,0,0,0,0}, {0,1,0,0,0,0}, {-1,1,-1,0,0,0}, {0,1,0,0,0,0}, {1,1,-1,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,-1,0,0}, {-1,1,-1,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {-1,1,0,0,1,1}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {-1,1,0,0,1,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}},
    {{0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,0}, {-1,1,0,-1,-1,-1}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {1,1,0,0,0,0}, {1,1,0,0,0,-1}, {0,1,0,0,0,0}, {0,1,0,0,0,0}},
    {{0,1,0,0,0,0}, {0,1,0,0,0,0}, {-1,1,0,0,0,0}, {1,1,0,0,0,0}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {-1,1,0,0,0,0}, {1,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}, {0,1,0,0,0,0}},
};

// Column reordering of Eq.-style B = A(:,perm) for the two symmetric families (1-based).
inline constexpr int paper333_perm[23] = {1, 2, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 3, 4, 5, 6, 7, 8, 9};
inline constexpr int param333_perm[23] = {1, 2, 3, 4, 5, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 6, 7, 8, 9, 10, 11};

}  // namespace mmt::data

#pragma once

namespace qbaker {

/// Sign of the B-gate phase for which the QFT gate network reproduces the
/// DFT matrix (F'_L)_{kj} = e^{-2 pi i k j / D} / sqrt(D). Fixed by brute-force
/// comparison of both candidates (see tests/test_qft.cpp): a plain B gate
/// multiplies by e^{-i pi / 2^{|n-m|}}, a conjugated one by e^{+i pi / 2^{|n-m|}}.
/// With the opposite sign the network realizes conj(F'_L) instead.
inline constexpr int kDftPhaseSign = -1;

}  // namespace qbaker

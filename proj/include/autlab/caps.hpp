#pragma once

namespace autlab {

// Size limits for the exponential-in-the-worst-case algorithms. Every limit
// is explicit configuration; hitting one raises OrderCapExceeded (or
// LatticeBlowup for the subgroup-count limit) rather than degrading silently.
struct Caps {
  int closure = 10080;      // max group order for closure-style constructions
  int lattice = 128;        // max group order for full subgroup enumeration
  int iso = 256;            // max order for isomorphism search
  int aut = 64;             // max order for automorphism-group enumeration
  int max_subgroups = 20000;
};

}  // namespace autlab

#pragma once

// Compile-time fault knobs used by the mutation tests. All zero in normal
// builds; a mutant binary defines one of them to a nonzero value.

#ifndef WITSEN_FAULT_SCALE
#define WITSEN_FAULT_SCALE 0
#endif

#ifndef WITSEN_FAULT_WEIGHT
#define WITSEN_FAULT_WEIGHT 0
#endif

// Nonzero: half-integer rounding prefers the larger magnitude.
#ifndef WITSEN_FAULT_TIE
#define WITSEN_FAULT_TIE 0
#endif

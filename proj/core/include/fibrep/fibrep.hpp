#ifndef FIBREP_FIBREP_HPP
#define FIBREP_FIBREP_HPP

// Umbrella header pulling in the whole library.

#include "fibrep/fib.hpp"
#include "fibrep/representation.hpp"
#include "fibrep/zeckendorf.hpp"
#include "fibrep/enumerate.hpp"
#include "fibrep/recurrence.hpp"
#include "fibrep/bijections.hpp"
#include "fibrep/sequence_record.hpp"
#include "fibrep/golden.hpp"
#include "fibrep/verify.hpp"

#endif

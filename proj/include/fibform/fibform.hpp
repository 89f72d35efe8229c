#pragma once

// Everything except the live OEIS client (fibform/oeis_remote.hpp), which
// pulls in an HTTP stack.

#include "fibform/cfinite.hpp"
#include "fibform/decide.hpp"
#include "fibform/exact.hpp"
#include "fibform/fib.hpp"
#include "fibform/oeis.hpp"
#include "fibform/oracles.hpp"
#include "fibform/parser.hpp"
#include "fibform/seqform.hpp"
#include "fibform/synth.hpp"

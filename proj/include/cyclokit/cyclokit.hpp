#pragma once

// Umbrella header for the full toolkit (the CLI layer is separate in
// cyclokit/cli.hpp since it pulls in the argument parser and JSON writer).

#include "cyclokit/asymptotics.hpp"
#include "cyclokit/bfq.hpp"
#include "cyclokit/bracket.hpp"
#include "cyclokit/common.hpp"
#include "cyclokit/decide.hpp"
#include "cyclokit/ek.hpp"
#include "cyclokit/euler_products.hpp"
#include "cyclokit/orders.hpp"
#include "cyclokit/primes.hpp"

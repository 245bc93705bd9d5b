#ifndef PARKSTAT_PARKSTAT_HPP
#define PARKSTAT_PARKSTAT_HPP

#include "parkstat/bigint.hpp"
#include "parkstat/counting.hpp"
#include "parkstat/error.hpp"
#include "parkstat/lattice.hpp"
#include "parkstat/maps.hpp"
#include "parkstat/trees.hpp"
#include "parkstat/words.hpp"

#endif  // PARKSTAT_PARKSTAT_HPP

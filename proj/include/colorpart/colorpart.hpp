#ifndef COLORPART_COLORPART_HPP
#define COLORPART_COLORPART_HPP

#include "colorpart/bell.hpp"
#include "colorpart/compositions.hpp"
#include "colorpart/divisors.hpp"
#include "colorpart/errors.hpp"
#include "colorpart/exact.hpp"
#include "colorpart/identities.hpp"
#include "colorpart/partitions.hpp"
#include "colorpart/series.hpp"

#endif  // COLORPART_COLORPART_HPP

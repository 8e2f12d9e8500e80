#pragma once

#include "characters.hpp"
#include "cutjoin.hpp"
#include "errors.hpp"
#include "genfun.hpp"
#include "hurwitz_numbers.hpp"
#include "laurent.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "ppoly.hpp"
#include "rational.hpp"
#include "serialize.hpp"
#include "verify.hpp"
#include "version.hpp"

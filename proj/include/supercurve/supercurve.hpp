#pragma once

#include "classifier.hpp"
#include "curve.hpp"
#include "enumerator.hpp"
#include "errors.hpp"
#include "heights.hpp"
#include "hurwitz.hpp"
#include "loci.hpp"
#include "numeric.hpp"
#include "poly.hpp"
#include "poly_io.hpp"
#include "version.hpp"

#pragma once

#include "errors.hpp"
#include "identities.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "planepart.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "schur.hpp"
#include "series.hpp"
#include "suite.hpp"

#pragma once

#include "qc/certificate.hpp"
#include "qc/cyclotomic.hpp"
#include "qc/field.hpp"
#include "qc/groebner.hpp"
#include "qc/linalg.hpp"
#include "qc/monomial.hpp"
#include "qc/pencil.hpp"
#include "qc/polynomial.hpp"
#include "qc/rational.hpp"
#include "qc/s6.hpp"

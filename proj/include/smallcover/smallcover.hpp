#pragma once

#include "smallcover/gf2.hpp"
#include "smallcover/polynomial.hpp"
#include "smallcover/quotient.hpp"
#include "smallcover/golden.hpp"
#include "smallcover/scheme.hpp"
#include "smallcover/digest.hpp"
#include "smallcover/face.hpp"
#include "smallcover/symmetry.hpp"
#include "smallcover/cell120.hpp"
#include "smallcover/builtin.hpp"
#include "smallcover/coloring.hpp"
#include "smallcover/enumerate.hpp"
#include "smallcover/extension.hpp"
#include "smallcover/charclass.hpp"
#include "smallcover/certificate.hpp"

#ifndef NINDEP_NINDEP_HPP
#define NINDEP_NINDEP_HPP

#include "nindep/constructions.hpp"
#include "nindep/curves.hpp"
#include "nindep/errors.hpp"
#include "nindep/exactnum.hpp"
#include "nindep/nodesets.hpp"
#include "nindep/poly2.hpp"
#include "nindep/upoly.hpp"
#include "nindep/verify.hpp"

#endif  // NINDEP_NINDEP_HPP

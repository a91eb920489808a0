#ifndef GSP_GSP_HPP
#define GSP_GSP_HPP

#include "gsp/core.hpp"
#include "gsp/git_locus.hpp"
#include "gsp/pgl2_oracle.hpp"
#include "gsp/pieces.hpp"
#include "gsp/quotient_strata.hpp"
#include "gsp/rootsys.hpp"
#include "gsp/verify.hpp"
#include "gsp/weyl.hpp"

#endif  // GSP_GSP_HPP

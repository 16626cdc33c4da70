#pragma once

#include "ghostkit/labels.hpp"
#include "ghostkit/modcat.hpp"
#include "ghostkit/functors.hpp"
#include "ghostkit/fusion.hpp"
#include "ghostkit/homalg.hpp"
#include "ghostkit/characters.hpp"
#include "ghostkit/rigidity.hpp"
#include "ghostkit/expr.hpp"
#include "ghostkit/config.hpp"
#include "ghostkit/verify.hpp"
#include "ghostkit/cli.hpp"

#pragma once

#include "janowski/disk_oracle.hpp"
#include "janowski/error.hpp"
#include "janowski/norm.hpp"
#include "janowski/params.hpp"
#include "janowski/radial.hpp"
#include "janowski/record.hpp"
#include "janowski/sampling.hpp"
#include "janowski/schwarz.hpp"
#include "janowski/verify.hpp"

#pragma once

#define UAVLOC_VERSION "0.1.0"

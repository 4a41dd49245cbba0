#pragma once

#define WALLSENS_VERSION "0.1.0"

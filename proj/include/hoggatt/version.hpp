#pragma once

#define HOGGATT_VERSION "0.1.0"

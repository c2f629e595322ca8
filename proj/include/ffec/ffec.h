#ifndef FFEC_H
#define FFEC_H
#endif

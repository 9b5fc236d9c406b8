"""Half-space dislocation (moment point source) kernel.

GENERATED by tools/generate_halfspace_kernel.py -- do not edit by hand.

Conventions: half space x3 < 0, traction-free surface x3 = 0, receiver
(X1,X2,X3) with X3 <= 0, source (Y1,Y2,Y3) with Y3 < 0, symmetric moment
density m (per unit fault area, units of stress times slip).  All arguments
broadcast as numpy arrays.

moment_displacement          -> displacement components (u1, u2, u3)
moment_displacement_gradient -> du_i/dX_j as g11, g12, ..., g33
"""
from numpy import sqrt, log, pi


def moment_displacement(X1, X2, X3, Y1, Y2, Y3, m11, m22, m33, m12, m13, m23, lam, mu):
    x0 = lam + mu
    x1 = 1/x0
    x2 = lam*x1
    x3 = x2 - 2
    x4 = -1/x3
    x5 = 12*Y3
    x6 = X3 + Y3
    x7 = x6**2
    x8 = X1 - Y1
    x9 = x8**2
    x10 = X2 - Y2
    x11 = x10**2
    x12 = x11 + x9
    x13 = x12 + x7
    x14 = x13**(-5/2)
    x15 = -x8
    x16 = x14*x15
    x17 = x8**3
    x18 = x13**(-7/2)
    x19 = 30*Y3
    x20 = x18*x19
    x21 = lam**2/x0**2 - 4*lam*x1 + 3
    x22 = -x21
    x23 = x22*x4
    x24 = sqrt(x13)
    x25 = x24 - x6
    x26 = 1/x25
    x27 = 3*x14
    x28 = x17*x27
    x29 = x26*x28
    x30 = 1/x13
    x31 = x25**(-2)
    x32 = x30*x31
    x33 = 3*x32
    x34 = x15*x33
    x35 = x13**(-2)
    x36 = x31*x35
    x37 = 2*x36
    x38 = x17*x37
    x39 = x13**(-3/2)
    x40 = 2*x39
    x41 = x15*x40
    x42 = x26*x41
    x43 = x15*x36
    x44 = x43*x9
    x45 = x25**(-3)
    x46 = x41*x45
    x47 = x46*x9
    x48 = 6*x14
    x49 = Y3*x48
    x50 = x49*x8
    x51 = x39*x8
    x52 = x26*x51
    x53 = x23*x52 - x50
    x54 = -6*x14*x9
    x55 = x8**4
    x56 = 5*x18
    x57 = x55*x56
    x58 = x40*x6
    x59 = x45*x58
    x60 = x59*x9
    x61 = x55*x6
    x62 = 2*x45
    x63 = x14*x62
    x64 = x13**(-3)
    x65 = x31*x64
    x66 = 4*x65
    x67 = x26*x6
    x68 = x25**(-4)
    x69 = x43*x6
    x70 = x69*x8
    x71 = 2*x51
    x72 = x15*x45
    x73 = x71*x72
    x74 = x6*x73
    x75 = x32*x6
    x76 = x39*x6
    x77 = x26*x76
    x78 = x75 + x77
    x79 = x70 + x74 + x78
    x80 = x2 - 1
    x81 = x80**2
    x82 = x4*x81
    x83 = 3*x82
    x84 = -x39
    x85 = x27*x9
    x86 = x84 + x85
    x87 = x52*x6
    x88 = 3*x75
    x89 = x6*x9
    x90 = x15*x88 + x28 + x29*x6 + x38*x6 + x41 + x42*x6 - x46*x89 - x51 - x69*x9 - x87
    x91 = 3*x9
    x92 = x36*x91
    x93 = x26*x85
    x94 = x6*x93
    x95 = x6*x92 + x60 + x94
    x96 = 3*x39
    x97 = -3*x26*x39*x6 - 3*x30*x31*x6 - x96
    x98 = x8*x82
    x99 = x15*x48
    x100 = 15*x18
    x101 = x100*x17
    x102 = x48*x6
    x103 = x102*x45
    x104 = x6*x99
    x105 = 6*x76
    x106 = x6*x65
    x107 = x101*x6
    x108 = x82*(-x101 - x103*x17 - x104*x26 - x105*x72 - 12*x106*x17 - x107*x26 + 6*x14*x15*x45*x6*x9 + 3*x14*x26*x6*x8 + 3*x14*x8 + 3*x15*x31*x6*x64*x9 + 6*x15*x35*x6*x68*x9 + 2*x31*x35*x6*x8 - 7*x69 - x99)
    x109 = x21*x4
    x110 = Y3*x109
    x111 = -x110*x52
    x112 = 2*Y3
    x113 = x109*x112
    x114 = x113*x36
    x115 = 2*x2
    x116 = x115 - 3
    x117 = -x116
    x118 = x117*x8
    x119 = X3 - Y3
    x120 = x119**2
    x121 = x12 + x120
    x122 = 3/x121
    x123 = x121**(-3/2)
    x124 = x123*x4
    x125 = x10*x9
    x126 = -x10
    x127 = x126*x32
    x128 = x127*x23
    x129 = x126*x36
    x130 = x129*x9
    x131 = x10*x14
    x132 = 3*x131
    x133 = x132*x9
    x134 = x133*x26
    x135 = x125*x37
    x136 = x126*x40
    x137 = x136*x45
    x138 = x137*x9
    x139 = 6*Y3
    x140 = x131*x139
    x141 = x10*x39
    x142 = x141*x26
    x143 = -x140 + x142*x23
    x144 = x125*x56
    x145 = x126*x6
    x146 = x145*x36
    x147 = x126*x59
    x148 = x37*x6
    x149 = x132*x6
    x150 = x149*x26
    x151 = x65*x9
    x152 = x125*x6
    x153 = x131*x62
    x154 = x145*x9
    x155 = 2*x35*x68
    x156 = x142*x6
    x157 = 3*x10*x14*x26*x6*x9 + 3*x10*x14*x9 + 2*x10*x31*x35*x6*x9 + x126*x30*x31*x6 - x126*x60 - x141 - x146*x9 - x156
    x158 = -x75 - x77
    x159 = x158 + x86
    x160 = x159 + x95
    x161 = -x160
    x162 = x11*x27
    x163 = x162*x26
    x164 = x163*x6
    x165 = x11*x6
    x166 = x10*x146
    x167 = 2*x141
    x168 = x145*x167*x45
    x169 = x10*x145
    x170 = 6*x68
    x171 = x170*x35
    x172 = x100*x9
    x173 = x11*x172
    x174 = x48*x9
    x175 = x165*x45
    x176 = -12*x151*x165 - x173*x67 - x173 - x174*x175
    x177 = x82*(x125*x145*x171 + 6*x131*x154*x45 + x160 + x162 + x164 + x165*x37 - x166 - x168 + x169*x65*x91 + x176)
    x178 = -x110*x142
    x179 = 3 - x115
    x180 = x122*x9 + x179
    x181 = x10*x124
    x182 = x20*x9
    x183 = x182*x6
    x184 = 1/x24
    x185 = x184*x6
    x186 = x185 - 1
    x187 = -x186
    x188 = x187*x31
    x189 = x188*x39
    x190 = x189*x23
    x191 = x190*x9
    x192 = x23*x94
    x193 = x187*x45
    x194 = x193*x30
    x195 = 2*x194
    x196 = x195*x23
    x197 = x49*x6
    x198 = x23*x77
    x199 = x184*x4
    x200 = x188*x199
    x201 = x200*x22
    x202 = -x197 + x198 - x201
    x203 = x202 + x40
    x204 = x27*x6
    x205 = 9*x14
    x206 = x205*x6
    x207 = x36*x7
    x208 = x26*x7
    x209 = -6*x187*x30*x45*x6 - 3*x187*x31*x39*x6 + x205*x208 + x206 + 6*x207 - 3*x26*x39 - 3*x30*x31
    x210 = x172*x6
    x211 = x40*x45
    x212 = x100*x7
    x213 = x212*x9
    x214 = x213*x26
    x215 = x6*x85
    x216 = x188*x215
    x217 = x193*x35
    x218 = 6*x217
    x219 = x105*x187*x68
    x220 = x219*x9
    x221 = -6*x14*x45*x7*x9 - x210 + x211*x9 - x214 + x216 + x218*x89 + x220 - 12*x31*x64*x7*x9 + x92 + x93
    x222 = x32*x9
    x223 = x26*x39
    x224 = x223*x9
    x225 = 2*x207
    x226 = x188*x76
    x227 = x30*x6
    x228 = x193*x227
    x229 = 2*x228
    x230 = x184*x26
    x231 = -x185*x188 + x223*x7 - x230 + x76
    x232 = x82*(-x208*x85 - x215 + x222 + x224 - x225*x9 + x226*x9 + x229*x9 + x231)
    x233 = x27*x7
    x234 = x233*x26
    x235 = x204 - x223 + x225 - x226 - x229 + x234 - x32
    x236 = x82*(-x221 - x235)
    x237 = x110*x189
    x238 = x237*x9
    x239 = x110*x94
    x240 = x36*x6
    x241 = x240*x9
    x242 = x113*x194
    x243 = Y3*x109*x77
    x244 = x200*x21
    x245 = Y3*x244
    x246 = -x109*x230 + x243 - x245 - x76
    x247 = x119*x123
    x248 = x247*x4
    x249 = x117*x30
    x250 = x19*x35
    x251 = -6*Y3*x30*x6 + x116
    x252 = X3*x39
    x253 = x121**(-5/2)
    x254 = x253*x91
    x255 = x119*x254
    x256 = Y3*x117
    x257 = -x80
    x258 = x257*x3
    x259 = x258*x26*x40
    x260 = x15*x32
    x261 = 2*x258
    x262 = x260*x261
    x263 = x256*x39
    x264 = x230*x261
    x265 = x247 - x263 - x264
    x266 = m13*x4
    x267 = x109*x32
    x268 = Y3*x267
    x269 = x109*x223
    x270 = Y3*x269
    x271 = -x123 + x268 + x270
    x272 = x37*x9
    x273 = x43*x8
    x274 = x23*x32
    x275 = x223*x23
    x276 = x274 + x275 - x49
    x277 = x39 - x85
    x278 = -x277 + 2*x31*x35*x6*x9 - x79 + x94
    x279 = 3*x11
    x280 = x15*x8
    x281 = x15*x165
    x282 = x11*x59
    x283 = x279*x36
    x284 = x164 + x282 + x283*x6
    x285 = x162 + x284
    x286 = x82*(x106*x279*x280 + x159 + x171*x281*x8 + x175*x8*x99 + x176 + x272*x6 + x285 - x70 - x74 + x94)
    x287 = -X3*(x182 - x23*x272 + x23*x273 + x23*x73 - x23*x93 + x276) - 3*Y3*x14*x21*x26*x4*x9 - 2*Y3*x21*x31*x35*x4*x9 + x110*x273 + x113*x51*x72 - x161*x4*x81 + x254 - 2*x278*x81 + x278*x82 + x286
    x288 = m12*x10
    x289 = x126*x48
    x290 = x10**3
    x291 = x100*x290
    x292 = x289*x6
    x293 = x126*x45
    x294 = x291*x6
    x295 = x82*(3*x10*x14*x26*x6 + 3*x10*x14 + 2*x10*x31*x35*x6 - x103*x290 - x105*x293 - 12*x106*x290 + 6*x11*x126*x14*x45*x6 + 3*x11*x126*x31*x6*x64 + 6*x11*x126*x35*x6*x68 - 7*x146 - x26*x292 - x26*x294 - x289 - x291)
    x296 = x271 + x84
    x297 = x11*x20
    x298 = x10*x129
    x299 = x167*x293
    x300 = -x162 + x39
    x301 = x166 + x168 + x78
    x302 = 2*x11*x31*x35*x6 + x164 - x300 - x301
    x303 = 3*x253
    x304 = x11*x303
    x305 = x162 + x84
    x306 = -x158 - x284 - x305
    x307 = -X3*(-x11*x23*x37 - x163*x23 + x23*x298 + x23*x299 + x276 + x297) - 3*Y3*x11*x14*x21*x26*x4 - 2*Y3*x11*x21*x31*x35*x4 + x110*x298 + x113*x141*x293 + x177 - 2*x302*x81 + x302*x82 + x304 - x306*x4*x81
    x308 = x4*x8
    x309 = x119*x303
    x310 = x10*x309
    x311 = 10*Y3
    x312 = X3*(x179 + x227*x311)
    x313 = x127*x261
    x314 = m23*x4
    x315 = x314*x8
    x316 = 2*X3
    x317 = 4*Y3
    x318 = x117*x6
    x319 = x30*x7
    x320 = x311*x319
    x321 = 3*x35
    x322 = X3*x321
    x323 = Y3*x321
    x324 = x318*x323
    x325 = 2*x188
    x326 = x258*x325
    x327 = x227*x26*x261
    x328 = x120*x303
    x329 = m33*(x123 + x184*(x249 + x322*(-x316 - x317 + x318 + x320) - x324 + x326 - x327) - x328)
    x330 = x20*x6
    x331 = -x204 + x223 - x225 + x226 + x229 - x234 + x32
    x332 = x100*x165
    x333 = x11*x212
    x334 = x26*x333
    x335 = x162*x6
    x336 = x188*x335
    x337 = x11*x219
    x338 = -6*x11*x14*x45*x7 + x11*x211 - 12*x11*x31*x64*x7 + x163 + x165*x218 + x283 - x332 - x334 + x336 + x337
    x339 = x82*(-x235 - x338)
    x340 = x204*x26
    x341 = X3*(3*x14*x22*x26*x4*x6 + 6*x14 - x190 - x196 + 2*x22*x31*x35*x4*x6 - x330) - x110*x340 - x113*x240 + x204 - x236 + x237 + x242 + x267 + x269 - x309 + 2*x331*x81 - x331*x82 - x339
    x342 = (1/8)/(pi*mu)
    x343 = x23*x260
    x344 = x11*x43
    x345 = x14*x8
    x346 = 3*x345
    x347 = x11*x26*x346
    x348 = x11*x8
    x349 = x348*x37
    x350 = x11*x46
    x351 = x346*x6
    x352 = x26*x351
    x353 = x165*x8
    x354 = x345*x62
    x355 = 3*x11*x14*x26*x6*x8 + 3*x11*x14*x8 + 2*x11*x31*x35*x6*x8 + x15*x30*x31*x6 - x165*x43 - x165*x46 - x51 - x87
    x356 = x11*x122 + x179
    x357 = x124*x8
    x358 = x14*x5
    x359 = x27*x290
    x360 = x26*x359
    x361 = x126*x33
    x362 = x290*x37
    x363 = x136*x26
    x364 = x11*x129
    x365 = x11*x137
    x366 = -6*x11*x14
    x367 = x10**4
    x368 = x367*x56
    x369 = x367*x6
    x370 = x126*x58
    x371 = -x11*x146 - x11*x147 + x126*x88 + x136 - x141 - x156 + x26*x370 + x290*x340 + x359 + x362*x6
    x372 = x10*x82
    x373 = x297*x6
    x374 = x11*x190
    x375 = x164*x23
    x376 = x11*x32
    x377 = x11*x223
    x378 = x82*(-x11*x225 + x11*x226 + x11*x229 - x162*x208 + x231 - x335 + x376 + x377)
    x379 = x11*x237
    x380 = x110*x164
    x381 = x165*x36
    x382 = x119*x304
    x383 = x10*x4
    x384 = m12*x8
    x385 = x10*x266
    x386 = x197 - x198 + x201
    x387 = x17*x7
    x388 = 9*x65
    x389 = x15*x207
    x390 = x188*x6
    x391 = x65*x7
    x392 = 4*x45*x7
    x393 = x392*x9
    x394 = x35*x6
    x395 = 4*x193
    x396 = 2*x217
    x397 = x207*x8 + x208*x346 + x351 - x390*x51 - x52
    x398 = x63*x7
    x399 = 9*x7
    x400 = x170*x187
    x401 = 4*x14*x15*x45*x7*x8 + 3*x15*x31*x64*x7*x8 - x15*x400*x51*x6 - x151*x399 + 4*x187*x35*x45*x6*x9 - 2*x193*x280*x394 - x210 - x214 + x216 - x273 + 2*x31*x35*x9 - x331 - x398*x9 - x73 + x93
    x402 = x11*x82
    x403 = x343*x8
    x404 = Y3*x40
    x405 = x23*x230
    x406 = -x243 + x245 + x404 - x405 + x76
    x407 = x23*x26
    x408 = x40*x407
    x409 = -x317*x39
    x410 = x248 + 2*x405 + x409
    x411 = x322*(2*Y3 - x318 - x320)
    x412 = x139*x394
    x413 = x186*x261*x31
    x414 = x120*x122 + x179
    x415 = x345*x5
    x416 = x10*x126
    x417 = x126*x207
    x418 = x279*x65*x7
    x419 = x394*x395
    x420 = x10*x207 + x132*x208 - x141*x390 - x142 + x149
    x421 = 4*x10*x126*x14*x45*x7 + 3*x10*x126*x31*x64*x7 + 4*x11*x187*x35*x45*x6 + 2*x11*x31*x35 - x11*x398 - x11*x399*x65 - x141*x145*x400 + x163 - x169*x396 - x298 - x299 - x331 - x332 - x334 + x336
    x422 = x82*x9
    x423 = x10*x128
    x424 = x131*x5
    x425 = x6**3
    x426 = x319 - 1
    x427 = x188*x23
    x428 = x23*x240
    x429 = x212*x26
    x430 = x388*x7
    x431 = x110*x188
    x432 = x206*x26
    x433 = 6*x240
    x434 = x188*x40
    x435 = 4*x194
    x436 = 8*x425*x65
    x437 = x26*x425
    x438 = x240*x426
    x439 = 8*x217*x7
    x440 = x188*x7
    x441 = x187**2
    x442 = x170*x227*x441
    x443 = -x233
    x444 = x441*x62
    x445 = -x184*x325 - x185*x444 + x26*x6*x96 - x27*x437 - x426*x75 + x434*x7 + x443
    x446 = x100*x437
    x447 = x212 - x27 + x426*x59 - x432 - x433 + x434 + x435 + x436 + x438 - x439 - x440*x48 + x441*x59 + x442 + x446
    x448 = x199*x22
    x449 = -X3*(x102 - x20*x7 + x23*x234 + x274*x426 - x275 - x427*x58 + x444*x448 + x49) - 2*Y3*x187*x21*x31*x39*x4*x6 + x110*x234 + x112*x199*x21*x441*x45 + x202 - x21*x26*x39*x4*x6 + x244 + x268*x426 - x270 + x443 + x96
    x450 = x124 - x325*x448 - x328*x4 - x358*x6 + 4*x39 + x407*x58
    u1 = -x342*(m11*(-x124*(-2*X1 + 2*Y1 + x118 + x122*x17) + 2*x4*x81*x90 + x4*(X3*(x16*x5 + x17*x20 - x23*x29 - x23*x34 - x23*x38 - x23*x42 + x23*x44 + x23*x47 + x53) - x108*x11 + x110*x29 + x110*x34 + x110*x42 - x110*x44 - x110*x47 + x111 + x114*x17 + x71 + x8*(-x83*(2*x14*x15*x17*x45*x6 + 6*x14*x26*x6*x9 + x15*x17*x31*x6*x64 + 2*x15*x17*x35*x6*x68 + 5*x31*x35*x6*x9 - x39 - x54 - x57*x67 - x57 + x60 - x61*x63 - x61*x66 - x79) - x86) - x82*x90 + x98*(-x85 - x95 - x97)) - x71) + m12*(2*x157*x4*x81 - x167 - x180*x181 + x4*(X3*(x125*x20 - x128 + x130*x23 - x134*x23 - x135*x23 + x138*x23 + x143) + x10*x161*x82 - x10*x177 + x110*x127 - x110*x130 + x110*x134 - x110*x138 + x114*x125 + x141 - x157*x82 + x178 - x91*(x131 + x82*(x10*x148 + x132 - x144*x67 - x144 + x145*x151 - x146 - x147 + x150 - x152*x66 - x153*x89 + x154*x155 + x154*x63)))) + m13*(-x180*x248 + 2*x232 + x4*(X3*(-x183 - x191 + x192 - x196*x9 - x203 + 2*x22*x31*x35*x4*x6*x9 - x54) + x109*x222 + x109*x224 - x11*x236 - x113*x241 - x232 + x238 - x239 + x242*x9 + x246 + x9*(x204 - x82*(-x209 - x221))) + x58) + m22*x308*(-x10*(x132 + x295) - x296 - x307) + x10*x315*x341 + x266*(x252*(-x249*x91 - x250*x89 - x251) - x255 + x256*x85 + x259*x9 - x262*x8 + x265) + x288*x4*(-x108*x8 - x271 - x287 - x86) + x308*x329 + x315*(3*Y3*x10*x117*x14 + 2*x10*x257*x26*x3*x39 - x132*x312 - x310 - x313))
    u2 = -x342*(m11*x383*(-x287 - x296 - x8*(x108 + x346)) + m12*(2*x355*x4*x81 - x356*x357 + x4*(X3*(x23*x344 - x23*x347 - x23*x349 + x23*x350 + x297*x8 - x343 + x53) + x110*x260 - x110*x344 + x110*x347 - x110*x350 + x111 + x114*x348 - x279*(x345 + x82*(x148*x8 + x155*x281 + x16*x165*x62 - x165*x354 - x26*x353*x56 + x281*x65 + x346 - x348*x56 + x352 - x353*x66 - x46*x6 - x69)) - x286*x8 + x306*x8*x82 - x355*x82 + x51) - x71) + m22*(-x124*(-2*X2 + 2*Y2 + x10*x117 + x122*x290) - x167 + 2*x371*x4*x81 + x4*(X3*(x126*x358 + x143 + x20*x290 - x23*x360 - x23*x361 - x23*x362 - x23*x363 + x23*x364 + x23*x365) + x10*(-x305 - x83*(6*x11*x14*x26*x6 + 5*x11*x31*x35*x6 + 2*x126*x14*x290*x45*x6 + x126*x290*x31*x6*x64 + 2*x126*x290*x35*x6*x68 + x282 - x301 - x366 - x368*x67 - x368 - x369*x63 - x369*x66 - x39)) + x110*x360 + x110*x361 + x110*x363 - x110*x364 - x110*x365 + x114*x290 + x167 + x178 - x295*x9 - x371*x82 + x372*(-x285 - x97))) + m23*(-x248*x356 + 2*x378 + x4*(X3*(-x11*x196 + 2*x11*x22*x31*x35*x4*x6 - x203 - x366 - x373 - x374 + x375) + x109*x376 + x109*x377 + x11*x242 + x11*(x204 - x82*(-x209 - x338)) - x113*x381 + x246 - x339*x9 - x378 + x379 - x380) + x58) + x314*(-x10*x313 + x11*x259 + x162*x256 + x252*(-x165*x250 - x249*x279 - x251) + x265 - x382) + x329*x383 + x341*x385*x8 + x384*x4*(-x10*x295 - x271 - x305 - x307) + x385*(3*Y3*x117*x14*x8 + 2*x257*x26*x3*x39*x8 - x262 - x309*x8 - x312*x346))
    u3 = -x342*(m11*(-x255*x4 + x358*x9 + x4*(X3*(x15*x22*x31*x35*x4*x6*x8 + x183 + x191 - x192 - x196*x280 - x23*x241 - x386) - Y3*x174 + x110*x241 - x110*x70 + x224*x23 + x232 - x238 + x239 + x242*x280 - x401*x402 - x403 + x406 - x8*(x351 + x82*(-x101*x208 - x104 - x107 - x15*x220 + 6*x15*x228 + x15*x391*x91 - x15*x396*x89 + x16*x393 + x17*x394*x395 - x208*x99 + x28*x390 + x29 + x34 + x38 - x387*x388 - x387*x63 - 5*x389 + x390*x41 + x397 + x42 - x44 - x47))) + 2*x403 - x408*x9 + x410) + m13*x8*(x4*(-x402*x447 - x449 - x82*(x172*x437 - x174*x440 + x213 + x277 + x426*x60 - x432*x9 - x433*x9 + x434*x9 + x435*x9 + x436*x9 + x438*x9 - x439*x9 + x441*x60 + x442*x9 + x445)) + x450) + m13*(-x117*x71 + x184*x4*(x118*x30 + x118*x323*x6 - x15*x413 + x327*x8 + x411*x8 + x412*x8) - x357*x414 - x415*x6) + m22*(x11*x358 - x11*x408 - x382*x4 + x4*(X3*(x10*x126*x22*x31*x35*x4*x6 - x196*x416 - x23*x381 + x373 + x374 - x375 - x386) - x10*(x149 + x82*(x11*x126*x14*x392 - x11*x145*x396 - x126*x337 + x126*x418 + 6*x145*x194 + x188*x204*x290 + x188*x370 - x208*x289 - x208*x291 - x290*x398 - x290*x399*x65 + x290*x419 - x292 - x294 + x360 + x361 + x362 + x363 - x364 - x365 - 5*x417 + x420)) - x11*x49 - x110*x166 + x110*x381 + x23*x377 + x242*x416 + x378 - x379 + x380 + x406 - x421*x422 - x423) + x410 + 2*x423) + m23*x10*(x4*(-x422*x447 - x449 - x82*(-x11*x432 + x11*x434 + x11*x435 + x11*x436 - x11*x439 - x11*x440*x48 + x11*x442 + x11*x446 + x282*x426 + x282*x441 + x300 + x333 + x381*x426 - 6*x381 + x445)) + x450) + m23*(-x117*x167 - x181*x414 + x184*x4*(x10*x249 + x10*x324 + x10*x327 + x10*x411 + x10*x412 - x126*x413) - x424*x6) + m33*(-x124*(x112 + x117*x119 + x119**3*x122 - x316) + x318*x40 + x358*x7 + x4*(x186*x326 - x233*x256 + x252*(-18*Y3*x227 + x115 + 3*x249*x7 + x250*x425 - 6*x319 - 1) + x263 - x264*x426 + x404 - x49*x7 + x58) + x409 - 4*x76) + x288*(-x308*x309 + 2*x343 + x4*(X3*(-x15*x196 - x23*x352 + x23*x69 + x330*x8 + x427*x51 - x428*x8) + 3*Y3*x14*x21*x26*x4*x6*x8 + 2*Y3*x15*x187*x21*x30*x4*x45 + Y3*x21*x31*x35*x4*x6*x8 - x110*x69 + x22*x26*x39*x4*x8 + x331*x4*x8*x81 - x343 - x351 - x401*x98 - x431*x51 - x50 - x82*(x11*x16*x392 - x11*x354*x7 + x15*x229 - x15*x337 + x15*x418 + x165*x188*x346 + 4*x217*x353 + x260 - x281*x396 - x332*x8 - x344 + x347 - x348*x429 - x348*x430 + x349 - x350 - x389 + x397)) - x407*x71 + x415) + x384*(2*x128 - x167*x407 - x310*x4 + x4*(X3*(x10*x330 - x10*x428 - x126*x196 + x141*x427 + x146*x23 - x150*x23) + 3*Y3*x10*x14*x21*x26*x4*x6 + Y3*x10*x21*x31*x35*x4*x6 + 2*Y3*x126*x187*x21*x30*x4*x45 + x10*x22*x26*x39*x4 + x10*x331*x4*x81 - x110*x146 - x128 - x140 - x141*x431 - x149 - x372*x421 - x82*(-x100*x152 + x125*x419 - x125*x429 - x125*x430 + x126*x14*x393 - x126*x220 + x126*x391*x91 + x127 - x130 + x133*x390 + x134 + x135 - x138 + x145*x195 - x153*x7*x9 - x154*x396 - x417 + x420)) + x424))
    return u1, u2, u3


def moment_displacement_gradient(X1, X2, X3, Y1, Y2, Y3, m11, m22, m33, m12, m13, m23, lam, mu):
    x0 = lam + mu
    x1 = 1/x0
    x2 = lam*x1
    x3 = x2 - 2
    x4 = -1/x3
    x5 = X2 - Y2
    x6 = X3 + Y3
    x7 = x6**2
    x8 = X1 - Y1
    x9 = x8**2
    x10 = x5**2
    x11 = x10 + x9
    x12 = x11 + x7
    x13 = x12**(-5/2)
    x14 = -x8
    x15 = x13*x14
    x16 = 3*x15
    x17 = x16*x5
    x18 = -x17
    x19 = x14*x9
    x20 = x12**(-9/2)
    x21 = 210*x20
    x22 = Y3*x21
    x23 = x19*x22
    x24 = lam**2/x0**2 - 4*x2 + 3
    x25 = -x24
    x26 = x25*x4
    x27 = -x5
    x28 = x8**3
    x29 = x12**(-2)
    x30 = sqrt(x12)
    x31 = -x30 + x6
    x32 = -x31
    x33 = x32**(-4)
    x34 = x29*x33
    x35 = 6*x34
    x36 = x28*x35
    x37 = x32**(-3)
    x38 = x28*x37
    x39 = x13*x27
    x40 = 2*x39
    x41 = 1/x32
    x42 = x12**(-7/2)
    x43 = x42*x9
    x44 = 15*x43
    x45 = x44*x5
    x46 = x14*x45
    x47 = x32**(-2)
    x48 = x12**(-3)
    x49 = x47*x48
    x50 = 8*x19
    x51 = x49*x50
    x52 = 3*x5
    x53 = x49*x52
    x54 = x28*x53
    x55 = x13*x5
    x56 = 4*x38
    x57 = x55*x56
    x58 = x27*x49
    x59 = x19*x58
    x60 = 4*x59
    x61 = x37*x9
    x62 = 6*x15
    x63 = x27*x62
    x64 = x61*x63
    x65 = x26*x54 + x26*x57 + x26*x60 + x26*x64
    x66 = 30*x42
    x67 = Y3*x66
    x68 = x14*x67
    x69 = x5*x68
    x70 = x29*x47
    x71 = x27*x70
    x72 = 2*x71
    x73 = x72*x8
    x74 = x17*x41
    x75 = x12**(-3/2)
    x76 = 6*x37
    x77 = x75*x76
    x78 = x77*x8
    x79 = x27*x78
    x80 = x26*x73 + x26*x74 + x26*x79 - x69
    x81 = 60*Y3
    x82 = x42*x81
    x83 = x8*x82
    x84 = 6*x55
    x85 = x8*x84
    x86 = x26*x41*x85
    x87 = x5*x70
    x88 = x8*x87
    x89 = -x14*x26*x72 - 5*x26*x88 + x5*x83 - x86
    x90 = 35*x20
    x91 = x14*x28
    x92 = x90*x91
    x93 = x5*x92
    x94 = x49*x9
    x95 = x5*x94
    x96 = x6*x95
    x97 = x41*x6
    x98 = x6*x61
    x99 = x55*x98
    x100 = 10*x99
    x101 = x8**4
    x102 = x13*x6
    x103 = x32**(-5)
    x104 = 8*x27
    x105 = x103*x104
    x106 = x102*x105
    x107 = 6*x33
    x108 = x107*x48
    x109 = x101*x6
    x110 = x108*x109
    x111 = 2*x101
    x112 = x27*x6
    x113 = x112*x37
    x114 = 3*x9
    x115 = x49*x6
    x116 = x114*x115
    x117 = x116*x27
    x118 = x12**(-4)
    x119 = x118*x47
    x120 = 5*x119
    x121 = x109*x5
    x122 = x102*x61
    x123 = 8*x37
    x124 = x123*x42
    x125 = 12*x34
    x126 = x6*x9
    x127 = x126*x27
    x128 = 24*x119
    x129 = x6*x91
    x130 = x129*x5
    x131 = x28*x42
    x132 = x131*x14
    x133 = 10*x37
    x134 = x133*x6
    x135 = 6*x119
    x136 = x112*x91
    x137 = x33*x48
    x138 = 8*x137
    x139 = x14*x8
    x140 = 8*x115
    x141 = x139*x140
    x142 = x112*x133
    x143 = 15*x42
    x144 = x143*x6
    x145 = x144*x5
    x146 = x139*x41
    x147 = 3*x55
    x148 = x139*x143
    x149 = x147 + x148*x5
    x150 = x6*x71
    x151 = 2*x75
    x152 = x151*x37
    x153 = x152*x6
    x154 = x153*x27
    x155 = -x154
    x156 = x6*x87
    x157 = 2*x156
    x158 = x147*x41
    x159 = x158*x6
    x160 = -x150 + x155 + x157 + x159
    x161 = x6*x62
    x162 = x27*x8
    x163 = x162*x37
    x164 = x161*x163
    x165 = 4*x115
    x166 = x165*x27
    x167 = x139*x166
    x168 = -x164 - x167
    x169 = x2 - 1
    x170 = x169**2
    x171 = x170*x4
    x172 = 5*x42
    x173 = x139*x172
    x174 = 3*x8
    x175 = x102*x38
    x176 = 2*x27
    x177 = x36*x6
    x178 = x115*x50
    x179 = x28*x6
    x180 = x161*x61
    x181 = -x166*x19 - x179*x53 - x180*x27 - x57*x6
    x182 = x6*x75
    x183 = x182*x76
    x184 = x183*x8
    x185 = 2*x150
    x186 = -x17*x97 + x18 - x184*x27 - x185*x8
    x187 = x14*x185
    x188 = x156*x8
    x189 = x187 + 5*x188 + x85*x97 + x85
    x190 = x175*x176 + x177*x27 + x178*x5 + x181 + x186 + x189 + x46*x97 + x46
    x191 = x14*x70
    x192 = 2*x191
    x193 = x192*x6
    x194 = -x193
    x195 = x10*x49
    x196 = x195*x8
    x197 = x196*x6
    x198 = x102*x37
    x199 = x10*x198
    x200 = x199*x8
    x201 = x14*x195
    x202 = x201*x6
    x203 = x6*x66
    x204 = x10*x203
    x205 = x19*x37
    x206 = 24*x103
    x207 = x179*x206
    x208 = x27*x55
    x209 = 18*x137
    x210 = x27*x5
    x211 = x179*x210
    x212 = x210*x6
    x213 = x131*x76
    x214 = x115*x210
    x215 = x214*x8
    x216 = x113*x55
    x217 = 18*x34
    x218 = x6*x8
    x219 = 18*x119
    x220 = x19*x6
    x221 = x210*x220
    x222 = 24*x137
    x223 = x203*x210
    x224 = 6*x102
    x225 = x224*x38
    x226 = x70*x8
    x227 = 7*x226
    x228 = 12*x49
    x229 = x19*x228
    x230 = 3*x6
    x231 = x230*x49
    x232 = x231*x28
    x233 = x224*x8
    x234 = x233*x41
    x235 = x14*x44
    x236 = x235*x97
    x237 = 6*x13
    x238 = x237*x8
    x239 = x235 + x238
    x240 = -x232 + x234 + x236 + x239
    x241 = -x177 + x180 + x184 - x225 + x227*x6 + x229*x6 + x240
    x242 = x5*x62
    x243 = x113*x242
    x244 = x14*x210
    x245 = x165*x244
    x246 = -x243 - x245
    x247 = x16*x6
    x248 = x247*x41
    x249 = -x248
    x250 = x10*x66
    x251 = x250*x8
    x252 = 105*x20
    x253 = x19*x252
    x254 = x10*x253
    x255 = x203*x8
    x256 = 15*x119
    x257 = x10*x179
    x258 = x10*x143
    x259 = x14*x258
    x260 = x259*x97
    x261 = 24*x37
    x262 = x10*x6
    x263 = x261*x262
    x264 = 72*x119
    x265 = x19*x262
    x266 = -x16
    x267 = x259 + x266
    x268 = -x10*x255*x41 + x131*x263 + x209*x257 + x249 - x251 - x254*x97 - x254 + x256*x257 + x260 - x264*x265 + x267
    x269 = x171*(x194 - 27*x197 - 16*x200 + 8*x202 - x204*x205 + x205*x223 - x207*x208 - x209*x211 + x210*x217*x218 - x212*x213 + 6*x215 + 14*x216*x8 + x219*x221 + x221*x222 + x241 + x246 + x268)
    x270 = x249 + x266
    x271 = x194 + x270
    x272 = -x241 - x271
    x273 = x172*x9
    x274 = x273*x5
    x275 = x27*x94
    x276 = x275*x6
    x277 = 2*x34
    x278 = x126*x277
    x279 = 2*x55
    x280 = x279*x61
    x281 = x280*x6
    x282 = x122*x176
    x283 = -x281 + x282
    x284 = x171*x174
    x285 = 2*Y3
    x286 = x24*x4
    x287 = x285*x286
    x288 = x287*x71*x8
    x289 = Y3*x286
    x290 = x289*x54
    x291 = x289*x74
    x292 = 4*Y3
    x293 = x286*x292
    x294 = x293*x38*x55
    x295 = x289*x79
    x296 = x293*x59
    x297 = x289*x64
    x298 = x174*x55
    x299 = -6*Y3*x13*x24*x4*x41*x5*x8 - 2*Y3*x14*x24*x27*x29*x4*x47 - 5*Y3*x24*x29*x4*x47*x5*x8 + x298
    x300 = X3 - Y3
    x301 = x300**2
    x302 = x11 + x301
    x303 = x302**(-5/2)
    x304 = 3*x303
    x305 = 2*Y1
    x306 = 2*X1
    x307 = 2*x2
    x308 = x307 - 3
    x309 = -x308
    x310 = x14*x309
    x311 = 1/x302
    x312 = x311*x9
    x313 = 5*x312
    x314 = x4*(x14*x313 - x305 + x306 + x310)
    x315 = x191*x6
    x316 = x26*x315
    x317 = 1/x30
    x318 = x317*x6
    x319 = x318 - 1
    x320 = -x319
    x321 = 4*x175
    x322 = 1/x12
    x323 = x320*x322
    x324 = x323*x8
    x325 = x26*x324
    x326 = 4*x37
    x327 = x29*x320
    x328 = x326*x327
    x329 = x19*x328
    x330 = x320*x47
    x331 = x26*x330
    x332 = x331*x75
    x333 = -x14*x332 + x248*x26 - x6*x68
    x334 = x333 + x62
    x335 = -12*x13*x8 - 30*x14*x42*x9
    x336 = x6*x83
    x337 = Y3*x6
    x338 = x21*x337
    x339 = 2*x26
    x340 = x327*x38
    x341 = x151*x330
    x342 = x341*x8
    x343 = 2*x15
    x344 = x343*x61
    x345 = x344*x6
    x346 = x331*x9
    x347 = x16*x346 + x19*x338 + x232*x26 - x234*x26 - x236*x26 + x26*x342 - x26*x345 + x336 - x339*x340
    x348 = x41*x75
    x349 = 3*x13
    x350 = x349*x9
    x351 = x350*x41
    x352 = -x351
    x353 = x101*x49
    x354 = x70*x9
    x355 = 4*x75
    x356 = x355*x61
    x357 = x111*x34
    x358 = x42*x7
    x359 = x123*x358
    x360 = x101*x7
    x361 = x108*x360
    x362 = 5*x132
    x363 = x49*x91
    x364 = x13*x7
    x365 = x364*x61
    x366 = x7*x94
    x367 = 12*x9
    x368 = x320*x33
    x369 = x182*x368
    x370 = 8*x327
    x371 = x7*x91
    x372 = 2*x137
    x373 = x37*x6
    x374 = x320*x48
    x375 = x373*x374
    x376 = x103*x370
    x377 = x37*x7
    x378 = 12*x377
    x379 = 25*x119
    x380 = x41*x7
    x381 = x123*x374
    x382 = x330*x6
    x383 = 3*x102
    x384 = -x383
    x385 = x44*x6
    x386 = x384 + x385
    x387 = x380*x44
    x388 = x330*x383
    x389 = x388*x9
    x390 = x322*x47
    x391 = x349*x7
    x392 = x391*x41
    x393 = 2*x70
    x394 = x393*x7
    x395 = x182*x330
    x396 = x323*x6
    x397 = 2*x37
    x398 = x396*x397
    x399 = x390 - x392 - x394 + x395 + x398
    x400 = x387 - x389 + x399
    x401 = 2*x13
    x402 = x37*x401
    x403 = x343*x38
    x404 = x224*x368
    x405 = x28*x368
    x406 = x161*x405
    x407 = x101*x402 + x101*x404 - x403 - x406
    x408 = x139*x144
    x409 = -x408
    x410 = x14*x226
    x411 = 2*x410
    x412 = x16*x8
    x413 = x41*x412
    x414 = x143*x7
    x415 = x41*x414
    x416 = x139*x415
    x417 = x49*x7
    x418 = 9*x417
    x419 = x139*x418
    x420 = x343*x377
    x421 = x420*x8
    x422 = x382*x412
    x423 = x139*x6
    x424 = x328*x423
    x425 = x409 + x411 + x413 - x416 - x419 - x421 + x422 + x424
    x426 = x172*x6
    x427 = x238*x41
    x428 = 3*x49
    x429 = x28*x428
    x430 = x261*x7
    x431 = x28*x7
    x432 = x235*x41
    x433 = x256*x431
    x434 = x13*x8
    x435 = 16*x377
    x436 = 27*x417
    x437 = x380*x66
    x438 = x437*x8
    x439 = x253*x6
    x440 = 18*x369
    x441 = x440*x8
    x442 = x373*x8
    x443 = 14*x327
    x444 = x233*x330
    x445 = x19*x7
    x446 = x374*x76
    x447 = x179*x446
    x448 = 36*x377
    x449 = x14*x43
    x450 = 75*x119
    x451 = x253*x380
    x452 = x235*x6
    x453 = x330*x452
    x454 = x14*x144
    x455 = x16*x41
    x456 = x14*x414
    x457 = x41*x456
    x458 = x247*x330
    x459 = x327*x6
    x460 = x326*x459
    x461 = x14*x460
    x462 = -x14*x418 + x192 - x420 - x454 + x455 - x457 + x458 + x461
    x463 = x61*x62
    x464 = 18*x102
    x465 = x368*x464
    x466 = 18*x368
    x467 = x15*x466
    x468 = -x126*x467 + x237*x38 + x28*x465 - x463
    x469 = x171*(x108*x445 - x131*x430 + x207*x327 - x209*x431 - x220*x261*x374 - x227 - x229 + x255 + x36 - x427 + x429 - x432 - x433 + x434*x435 + x436*x8 + x438 + x439 - x441 - x442*x443 - x444 + x445*x450 + x447 + x448*x449 + x451 - x453 + x462 + x468 - x78)
    x470 = x151*x61
    x471 = x107*x320
    x472 = x182*x471
    x473 = x472*x9
    x474 = x470 + x473
    x475 = 3*x390
    x476 = 3*x75
    x477 = x41*x476
    x478 = 9*x13
    x479 = x478*x6
    x480 = 6*x70
    x481 = x396*x76
    x482 = x382*x476
    x483 = x380*x478 - x475 - x477 + x479 + x480*x7 - x481 - x482
    x484 = x474 + x483
    x485 = 3*x354
    x486 = x237*x9
    x487 = x377*x486
    x488 = x327*x76
    x489 = x351 - x385 - x387 + x389
    x490 = x126*x488 - 12*x366 + x485 - x487 + x489
    x491 = x171*x8
    x492 = x491*(-x484 - x490)
    x493 = x28*x70
    x494 = x14*x348
    x495 = x286*x494
    x496 = x151*x38
    x497 = x151*x41
    x498 = x497*x8
    x499 = x14*x354
    x500 = x289*x471
    x501 = x500*x75
    x502 = x286*x337
    x503 = x226*x502
    x504 = x289*x76
    x505 = x49*x502
    x506 = 9*x505
    x507 = x293*x327
    x508 = x102*x174
    x509 = x191*x502
    x510 = x508 + x509
    x511 = x191*x7
    x512 = -x511
    x513 = x226*x7
    x514 = 2*x459
    x515 = x182*x28
    x516 = -x247
    x517 = -3*x13*x14*x41*x7 + x14*x395 + x494 + x516
    x518 = x171*(3*x13*x14*x320*x47*x6*x9 + 3*x13*x14*x41*x9 + 4*x13*x28*x37*x7 + 4*x14*x29*x320*x37*x6*x9 + 2*x14*x29*x47*x9 - x19*x418 - x233 - x235*x380 + 3*x28*x47*x48*x7 + 6*x320*x322*x37*x6*x8 + 2*x320*x47*x6*x75*x8 + 3*x322*x47*x8 - x344*x7 - x38*x514 + 2*x41*x75*x8 - x427*x7 - x452 - x471*x515 - x493 - x496 - x512 - 5*x513 - x517)
    x519 = x15*x287
    x520 = x286*x330
    x521 = Y3*x9
    x522 = x520*x521
    x523 = x520*x75
    x524 = Y3*x523
    x525 = x14*x524
    x526 = x248*x289
    x527 = x516 - x525 + x526
    x528 = x16*x522 + x232*x289 - x234*x289 - x287*x340 + x289*x342 - x432*x502 - x518 - x519*x98 + x527
    x529 = x300*x304
    x530 = 1/x3
    x531 = x478*x9
    x532 = -x15
    x533 = 2*x434
    x534 = 20*x131
    x535 = x101*x90
    x536 = x14*x535
    x537 = x8**5
    x538 = x14*x153
    x539 = x191*x230
    x540 = 8*x34
    x541 = 23*x49
    x542 = x14**2
    x543 = x165*x542
    x544 = x543*x8
    x545 = x109*x14
    x546 = x37*x542
    x547 = x233*x546
    x548 = 8*x103
    x549 = x15*x548
    x550 = 12*x37
    x551 = x42*x550
    x552 = x16 + x248
    x553 = 70*Y3
    x554 = x20*x553
    x555 = 1/x31
    x556 = x31**(-2)
    x557 = x31**(-3)
    x558 = x31**(-4)
    x559 = 4*x13
    x560 = x24*x530
    x561 = x557*x560
    x562 = x559*x561
    x563 = x101*x172
    x564 = x555*x560
    x565 = x29*x556
    x566 = x565*x9
    x567 = 6*x560
    x568 = x566*x567
    x569 = Y3*x237
    x570 = x555*x75
    x571 = x560*x570
    x572 = -x24*x322*x530*x556 + x569 + x571
    x573 = 3*X3
    x574 = x224*x9
    x575 = x41*x574
    x576 = x354*x6
    x577 = x353*x6
    x578 = x41*x563
    x579 = -x486
    x580 = x563 + x579
    x581 = x470*x6
    x582 = x390*x6
    x583 = x348*x6
    x584 = x582 + x583 + x75
    x585 = -x581 + x584
    x586 = x111*x198 - x403*x6
    x587 = x410*x6
    x588 = x139*x153
    x589 = x587 + x588
    x590 = x170*x530
    x591 = 3*x590
    x592 = x558*x6
    x593 = x29*x592
    x594 = x557*x6
    x595 = x355*x9
    x596 = x48*x556
    x597 = 5*x596
    x598 = x555*x574
    x599 = x565*x6
    x600 = 6*x599
    x601 = -x600*x9 + x75
    x602 = x322*x556
    x603 = x6*x602
    x604 = x570*x6
    x605 = x603 - x604
    x606 = 4*x101*x13*x557*x6 + 5*x101*x42*x555*x6 - x109*x597 - x111*x593 - x580 - x594*x595 - x598 - x601 - x605
    x607 = -x350
    x608 = x383*x41
    x609 = x608*x9
    x610 = x607 - x609
    x611 = 2*x587
    x612 = x412*x97
    x613 = x412 + x611 + x612
    x614 = x261*x42
    x615 = x408*x41
    x616 = x126*x542
    x617 = 20*x115
    x618 = x15*x442
    x619 = x542*x66
    x620 = x6*x619
    x621 = 30*x34
    x622 = x41*x479
    x623 = -45*x41*x42*x6*x9 + x622
    x624 = x6*x70
    x625 = x183 + x478 + 9*x624
    x626 = -24*x103*x13*x14*x28*x6 + x109*x209 + x109*x256 + x109*x614 - 72*x118*x14*x28*x47*x6 - 18*x13*x37*x542*x6 - 28*x13*x37*x6*x9 + x139*x617 - 105*x14*x20*x28*x41*x6 - 105*x14*x20*x28 - 18*x14*x28*x33*x48*x6 - 36*x14*x28*x37*x42*x6 + x148 + x219*x616 + x222*x616 - 6*x29*x33*x6*x9 - 30*x41*x42*x542*x6 - 30*x42*x542 - 45*x42*x9 + x423*x621 - 28*x47*x48*x542*x6 - 42*x47*x48*x6*x9 + x61*x620 + x615 + 26*x618 + x623 + x625
    x627 = Y3*x560
    x628 = 18*x627
    x629 = Y3*x564
    x630 = x143*x629
    x631 = 12*Y3
    x632 = x13*x631
    x633 = x561*x632
    x634 = Y3*x29*x558*x567
    x635 = x75*x9
    x636 = x561*x631
    x637 = 15*x596
    x638 = x627*x637
    x639 = 18*x13*x629
    x640 = x560*x602
    x641 = 3*Y3*x640 - x476*x629 + x476
    x642 = 15/x302**2
    x643 = 3*x312
    x644 = x308*x643
    x645 = -x307
    x646 = x645 + 1
    x647 = x302**(-3/2)
    x648 = x530*x647
    x649 = 6*x590
    x650 = -x75
    x651 = -x412
    x652 = x139*x66
    x653 = x5**3
    x654 = x252*x653
    x655 = x116*x5
    x656 = x27*x43
    x657 = x262*x76
    x658 = x10*x9
    x659 = x6*x658
    x660 = x27*x659
    x661 = x209*x660
    x662 = 18*x37
    x663 = x15*x8
    x664 = x102*x658
    x665 = x206*x27*x664
    x666 = 28*x115
    x667 = x139*x27
    x668 = x37*x653
    x669 = x139*x203
    x670 = x203*x27
    x671 = x6*x653
    x672 = x139*x671
    x673 = x6*x654
    x674 = x237*x27
    x675 = x143*x653
    x676 = x224*x668
    x677 = x224*x27
    x678 = x41*x677
    x679 = x183*x27
    x680 = x228*x653
    x681 = x41*x675
    x682 = x6*x681
    x683 = x10*x37
    x684 = x677*x683
    x685 = -x147
    x686 = -2*x29*x47*x5*x6 + x685
    x687 = -6*x10*x27*x29*x33*x6 - 3*x10*x27*x47*x48*x6 - 3*x13*x41*x5*x6 + 7*x150 + x6*x680 + x674 + x675 + x676 + x678 + x679 + x682 - x684 + x686
    x688 = 4*x61
    x689 = x55*x6*x688
    x690 = -14*x13*x27*x37*x6*x9 + x689
    x691 = x171*(18*x10*x118*x14*x27*x47*x6*x8 + 24*x10*x14*x27*x33*x48*x6*x8 + 30*x10*x14*x27*x37*x42*x6*x8 - x112*x662*x663 + 15*x118*x47*x6*x653*x9 - x139*x654 + 15*x14*x41*x42*x5*x6*x8 + 15*x14*x42*x5*x8 + 8*x14*x47*x48*x5*x6*x8 - x146*x670 - x146*x673 - x264*x672 + 18*x27*x29*x33*x6*x9 + 6*x27*x47*x48*x6*x9 - x27*x652 + 18*x33*x48*x6*x653*x9 + 24*x37*x42*x6*x653*x9 - x655 - x656*x657 - x661 - x665 - x666*x667 - x668*x669 - x687 - x690)
    x692 = x139*x67
    x693 = x26*x354
    x694 = x26*x470
    x695 = x10*x139
    x696 = x22*x695
    x697 = x26*x413
    x698 = x139*x258
    x699 = x41*x698
    x700 = x26*x699
    x701 = 8*x139
    x702 = x195*x701
    x703 = x26*x702
    x704 = x210*x9
    x705 = x35*x704
    x706 = x26*x705
    x707 = x27*x280
    x708 = x26*x707
    x709 = x26*x390
    x710 = x27*x87
    x711 = x26*x710
    x712 = x152*x210
    x713 = x26*x712
    x714 = x10*x67
    x715 = x10*x349
    x716 = x41*x715
    x717 = x26*x716
    x718 = x10*x70
    x719 = 2*x718
    x720 = x26*x348
    x721 = -x569 + x720
    x722 = -x26*x719 + x714 - x717 + x721
    x723 = x709 + x711 + x713 + x722
    x724 = x114*x195
    x725 = x26*x724
    x726 = x10*x61
    x727 = x559*x726
    x728 = x26*x727
    x729 = x210*x49
    x730 = 4*x139
    x731 = x729*x730
    x732 = x163*x242
    x733 = x26*x731 + x26*x732 + x725 + x728
    x734 = x6*x718
    x735 = 2*x734
    x736 = x258*x6
    x737 = x139*x41*x736
    x738 = x195*x6
    x739 = x701*x738
    x740 = x126*x35
    x741 = x210*x740
    x742 = x112*x280
    x743 = x156*x27
    x744 = x153*x210
    x745 = x743 + x744
    x746 = -x715
    x747 = x10*x608
    x748 = x746 - x747
    x749 = x6*x724
    x750 = 4*x122
    x751 = x10*x750
    x752 = x139*x165
    x753 = x210*x752 + x243*x8 + x749 + x751
    x754 = x576 - x585 - x613 + x698 + x735 + x737 + x739 + x741 + x742 - x745 - x748 - x753
    x755 = x10*x304
    x756 = x224*x61
    x757 = -x10*x756
    x758 = x650 + x715
    x759 = x747 + x757 + x758
    x760 = x230*x354
    x761 = x6*x84
    x762 = x27*x761
    x763 = x350 + x609 + x61*x762 + x760
    x764 = x741 - x744
    x765 = x10*x44
    x766 = x385*x41
    x767 = x228*x658
    x768 = -x582
    x769 = -x583
    x770 = x768 + x769
    x771 = -x10*x766 - x6*x767 - x765 + x770
    x772 = x116*x210 + x581 + x735 - x743 + x759 + x763 + x764 + x771
    x773 = x228*x262
    x774 = x10*x152
    x775 = x6*x774
    x776 = -x749
    x777 = x581 + x768 + x769 + x776
    x778 = -6*x10*x29*x33*x6*x9 + x775 + x777
    x779 = x230*x718
    x780 = x161*x683
    x781 = x759 + x779 + x780*x8
    x782 = x576 - x612 + x651 + x698 + x737
    x783 = x302**(-7/2)
    x784 = 15*x783
    x785 = x10*x784
    x786 = x286*x354
    x787 = Y3*x786
    x788 = x289*x710
    x789 = x289*x413
    x790 = x286*x348
    x791 = Y3*x790
    x792 = x286*x718
    x793 = -x285*x792 - x289*x716 + x791
    x794 = x286*x390
    x795 = x13*x293
    x796 = Y3*x794 + x139*x293*x729 + x289*x724 + x289*x732 - x647 + x726*x795
    x797 = -X3*(x26*x411 - x692 - x693 - x694 + x696 + x697 - x700 - x703 - x706 - x708 + x723 + x733) - 15*Y3*x10*x14*x24*x4*x41*x42*x8 - 8*Y3*x10*x14*x24*x4*x47*x48*x8 - 2*Y3*x13*x24*x27*x37*x4*x5*x9 - 6*Y3*x24*x27*x29*x33*x4*x5*x9 - 2*Y3*x24*x37*x4*x75*x9 + x139*x785 - 3*x14*x303*x8 - x170*x4*(-x139*x773 + x611 - x778 - x781 - x782) - 2*x170*x754 + x171*x754 + x171*x772 + x287*x410 + x289*x712 + x755 - x787 + x788 + x789 + x793 + x796
    x798 = m22*x4
    x799 = 10*x322
    x800 = Y3*x799
    x801 = x139*x800
    x802 = x6*x799
    x803 = x29*x553
    x804 = x7*x803
    x805 = x139*x804
    x806 = 5*x322
    x807 = x218*x310*x806
    x808 = x322*x7
    x809 = 10*x808
    x810 = Y3*x809
    x811 = -x810
    x812 = 2*X3
    x813 = x309*x6
    x814 = -x813
    x815 = x292 + x812 + x814
    x816 = x811 + x815
    x817 = X3*x349
    x818 = x14*x304
    x819 = x8*x818
    x820 = x301*x784
    x821 = x139*x820
    x822 = x144*x8
    x823 = Y3*x310
    x824 = x822*x823
    x825 = x323*x688
    x826 = -x169*x3
    x827 = 2*x576
    x828 = x826*x827
    x829 = x41*x8
    x830 = x161*x829
    x831 = x826*x830
    x832 = x139*x826
    x833 = x309*x75
    x834 = x309*x8
    x835 = x16*x834 + x833
    x836 = x301*x304
    x837 = Y3*x309*x383
    x838 = x6*x826
    x839 = x497*x838
    x840 = 2*x317
    x841 = x330*x840
    x842 = x826*x841
    x843 = x647 - x836 - x837 - x839 + x842
    x844 = m33*x4
    x845 = x171*x626
    x846 = 6*x226
    x847 = x355*x37
    x848 = x8*x847
    x849 = x26*x848
    x850 = x14*x152
    x851 = x26*x850
    x852 = 3*x191
    x853 = x26*x455
    x854 = x38*x559
    x855 = x19*x35
    x856 = 4*x542
    x857 = x49*x8
    x858 = x856*x857
    x859 = x238*x546
    x860 = -x538
    x861 = -x321
    x862 = x6*x848
    x863 = x226*x6
    x864 = x6*x855
    x865 = x178 + x240 + x345 - x539 - x544 - x547 + x860 + x861 + x862 + 6*x863 + x864
    x866 = x270 + x865
    x867 = 6*x303
    x868 = 15*x131
    x869 = x161*x41
    x870 = x14*x183
    x871 = 7*x191
    x872 = x228*x28
    x873 = x6*x868
    x874 = x349*x8
    x875 = -x874
    x876 = -2*x29*x47*x6*x8 + x875
    x877 = -3*x13*x41*x6*x8 - 6*x14*x29*x33*x6*x9 - 3*x14*x47*x48*x6*x9 - x180 + x225 + x41*x873 + x6*x871 + x6*x872 + x62 + x868 + x869 + x870 + x876
    x878 = -x171*x877
    x879 = x125*x262
    x880 = x262*x35
    x881 = x14*x880
    x882 = 12*x15
    x883 = x6*x882
    x884 = x6*x683
    x885 = x15*x206*x659
    x886 = x209*x265
    x887 = x262*x542
    x888 = x8*x887
    x889 = x289*x850
    x890 = x289*x455
    x891 = x293*x542
    x892 = x569*x8
    x893 = -X3*(x23 - x26*x344 - x26*x427 + x26*x429 - x26*x432 - x26*x51 - x26*x846 + x26*x852 + x26*x854 - x26*x855 + x26*x858 + x26*x859 - x68 + x83 - x849 + x851 + x853) - 2*Y3*x13*x14*x24*x37*x4*x9 - 6*Y3*x13*x24*x4*x41*x8 - 6*Y3*x14*x24*x29*x33*x4*x9 - 15*Y3*x14*x24*x4*x41*x42*x9 - 8*Y3*x14*x24*x4*x47*x48*x9 - 6*Y3*x24*x29*x4*x47*x8 - 4*Y3*x24*x37*x4*x75*x8 - 3*x14*x303 - x170*x272*x4 - 2*x170*x866 + x171*x866 + x171*(-30*x197 - 24*x200 + 15*x202 + x219*x888 + x222*x888 + x268 - 36*x449*x884 + x620*x683*x8 + x683*x883 - x8*x879 + x865 + x881 - x885 - x886) + x19*x784 + x266 + x286*x546*x892 + x289*x429 + x289*x852 + x38*x795 + x8*x867 + x857*x891 + x878 + x889 + x890
    x894 = m12*x4
    x895 = x5*x894
    x896 = x139*x338
    x897 = x116*x26
    x898 = x327*x61
    x899 = x339*x898
    x900 = x26*x471
    x901 = x26*x328
    x902 = x331*x412
    x903 = x343*x442
    x904 = x26*x903
    x905 = x115*x139
    x906 = 9*x26
    x907 = x26*x615
    x908 = x323*x397
    x909 = x26*x908
    x910 = x26*x393*x6
    x911 = x6*x67
    x912 = x26*x608
    x913 = -x332 - x911 + x912
    x914 = -x909 + x910 + x913
    x915 = x237 + x914
    x916 = -x139*x901 - x26*x750 + x635*x900 + x652 - x896 - x897 + x899 - x902 + x904 + x905*x906 + x907 + x915
    x917 = 4*x365
    x918 = x114*x417
    x919 = x327*x98
    x920 = 2*x919
    x921 = x383 + x408
    x922 = -x348 - x390 + x392 + x394 - x395 - x398
    x923 = -x413 + x416 - x422
    x924 = x354 + x421 - x918 + x920 + x921 + x922 + x923
    x925 = -x411 + x419 - x424 + x474 - x917 + x924
    x926 = -x925
    x927 = x171*x926
    x928 = x263*x374
    x929 = x62*x8
    x930 = -x465*x658 - x486*x683
    x931 = x262*x466*x663 + x683*x929 + x930
    x932 = x658*x7
    x933 = x10*x7
    x934 = x43*x933
    x935 = x256*x932
    x936 = x446*x659
    x937 = -x724 + x935 - x936
    x938 = -24*x10*x103*x29*x320*x6*x9 - 6*x10*x29*x33*x9 + x209*x932 + x261*x934 + x937
    x939 = x139*x252
    x940 = x262*x939
    x941 = x10*x252
    x942 = x139*x380*x941
    x943 = x139*x330*x736
    x944 = 3*x718
    x945 = x10*x237
    x946 = x377*x945
    x947 = x10*x472
    x948 = x774 + x947
    x949 = x10*x414
    x950 = x41*x949
    x951 = x10*x388
    x952 = x716 - x736 - x950 + x951
    x953 = -x228*x933 + x262*x488 + x944 - x946 + x948 + x952
    x954 = x699 - x940 - x942 + x943 + x953
    x955 = x171*(75*x10*x118*x14*x47*x7*x8 + 6*x10*x14*x33*x48*x7*x8 + 36*x10*x14*x37*x42*x7*x8 - x139*x928 - x228*x695 - x925 - x931 - x938 - x954)
    x956 = x300*x784
    x957 = x139*x956
    x958 = x286*x470
    x959 = x287*x898
    x960 = x500*x635
    x961 = x287*x618
    x962 = x139*x506
    x963 = x289*x615
    x964 = x383 + x922
    x965 = x474 + x490
    x966 = x964 + x965
    x967 = -x171*x966
    x968 = x287*x37
    x969 = x323*x968
    x970 = x287*x624
    x971 = x289*x608
    x972 = -x524 - x969 + x970 + x971
    x973 = x384 + x972
    x974 = x967 + x973
    x975 = -x790
    x976 = -x24*x322*x4*x47 + x529 + x975
    x977 = m23*x4
    x978 = x5*x977
    x979 = x806*x9
    x980 = x126*x803
    x981 = x308*x979 - x980
    x982 = 30*x322*x337
    x983 = -6*lam*x1 + x982 + 9
    x984 = x300*x303
    x985 = 9*x984
    x986 = Y3*x308
    x987 = x169*x3
    x988 = 6*x987
    x989 = -x478*x986 + x570*x988 - x602*x988 - x985
    x990 = x9*x956
    x991 = x555*x987
    x992 = x557*x987
    x993 = x44*x986 - x486*x991 + x566*x988 - x595*x992 + x990
    x994 = x337*x799
    x995 = x645 + 3
    x996 = x994 + x995
    x997 = -x529
    x998 = 2*x602*x987
    x999 = x151*x555
    x1000 = -Y3*x308*x349 + x987*x999
    x1001 = x1000 + x997 - x998
    x1002 = x1001 + x817*(-x981 - x996) + x993
    x1003 = (1/8)/(pi*mu)
    x1004 = x238*x27
    x1005 = x22*x27
    x1006 = x27*x868
    x1007 = x1006*x41
    x1008 = 8*x58
    x1009 = x1008*x28
    x1010 = x5*x855
    x1011 = x14*x82
    x1012 = 6*x14
    x1013 = x1012*x71
    x1014 = x41*x63
    x1015 = x1011*x27 - x1013*x26 - x1014*x26 - x26*x88
    x1016 = x27*x67
    x1017 = 2*x87
    x1018 = x1017*x14
    x1019 = x27*x874
    x1020 = x1019*x41
    x1021 = x5*x77
    x1022 = x1021*x14
    x1023 = -x1016*x8 + x1018*x26 + x1020*x26 + x1022*x26
    x1024 = -x39
    x1025 = -30*x27*x42*x9
    x1026 = x27*x535
    x1027 = x153*x5
    x1028 = x5*x740
    x1029 = x109*x27
    x1030 = x133*x42
    x1031 = x5*x6
    x1032 = x27*x349
    x1033 = x27*x608
    x1034 = x1032 + x1033
    x1035 = x27*x273
    x1036 = x1012*x150 + x188 + x27*x869 + x63
    x1037 = -x1019
    x1038 = x41*x508
    x1039 = x1037 - x1038*x27 - x14*x157 - x5*x870
    x1040 = x1006*x97 + x1006 + x1008*x179 + x1036 + x1039 + x181 + x345*x5 + x5*x864
    x1041 = x210*x66
    x1042 = x252*x28
    x1043 = x174*x738
    x1044 = 30*x131
    x1045 = x210*x373
    x1046 = x14*x203
    x1047 = x210*x41
    x1048 = x1042*x6
    x1049 = x10*x326
    x1050 = x102*x1049
    x1051 = x1050*x8
    x1052 = -14*x10*x13*x14*x37*x6 + x1051
    x1053 = x171*(15*x10*x118*x28*x47*x6 + 18*x10*x14*x29*x33*x6 + 6*x10*x14*x47*x48*x6 + 18*x10*x28*x33*x48*x6 + 24*x10*x28*x37*x42*x6 - x1041*x14 - x1042*x210 - x1043 - x1044*x1045 - x1046*x1047 - x1047*x1048 - x1052 + 18*x118*x14*x27*x47*x5*x6*x9 + 24*x14*x27*x33*x48*x5*x6*x9 + 30*x14*x27*x37*x42*x5*x6*x9 - x15*x212*x662 - x211*x264 - x244*x666 + 15*x27*x41*x42*x5*x6*x8 + 15*x27*x42*x5*x8 + 8*x27*x47*x48*x5*x6*x8 - x449*x657 - x877 - x885 - x886)
    x1054 = 4*x276
    x1055 = -x185
    x1056 = -x1032
    x1057 = -x1033
    x1058 = x1056 + x1057
    x1059 = x1055 + x1058
    x1060 = x1022*x289
    x1061 = x1020*x289
    x1062 = x14*x287
    x1063 = x1062*x87
    x1064 = x1013*x289 + x1014*x289 + x289*x88
    x1065 = 5*x311
    x1066 = x1065*x28 + x305 - x306 + x834
    x1067 = x27*x304
    x1068 = x1067*x4
    x1069 = x327*x688
    x1070 = x1069*x27
    x1071 = x150*x26
    x1072 = x156*x26
    x1073 = -x1072
    x1074 = -x5*x899
    x1075 = x26*x655
    x1076 = x1071 + x1073 + x1074 + x1075 - x26*x282
    x1077 = x27*x911
    x1078 = x1033*x26 - x1077 - x27*x332
    x1079 = x1078 + x674
    x1080 = x338*x9
    x1081 = x5*x909
    x1082 = x27*x385
    x1083 = x1082*x41
    x1084 = x331*x350
    x1085 = x1080*x27 + x1081 - x1083*x26 + x1084*x27
    x1086 = x152*x5
    x1087 = 4*x275
    x1088 = x417*x52
    x1089 = x326*x7
    x1090 = x123*x7
    x1091 = x7*x9
    x1092 = x1091*x5
    x1093 = x397*x459
    x1094 = x1093*x5
    x1095 = x1091*x137
    x1096 = x27*x378
    x1097 = x1091*x27
    x1098 = x380*x90
    x1099 = x27*x9
    x1100 = 8*x374
    x1101 = x5*x98
    x1102 = x126*x5
    x1103 = x40*x61
    x1104 = x368*x9
    x1105 = -x1103 - x1104*x677 + x1104*x761 + x280
    x1106 = x144*x27
    x1107 = x1032*x41
    x1108 = x27*x414
    x1109 = x1108*x41
    x1110 = x39*x397
    x1111 = x27*x383
    x1112 = x1111*x330
    x1113 = x112*x327
    x1114 = x1113*x326
    x1115 = -x1106 + x1107 - x1109 - x1110*x7 + x1112 + x1114 - x27*x418 + x72
    x1116 = x27*x426
    x1117 = x354*x5
    x1118 = x470*x5
    x1119 = 9*x7
    x1120 = x27*x44
    x1121 = x7*x87
    x1122 = x7*x71
    x1123 = -x1122
    x1124 = x1121 + x1123
    x1125 = x27*x348
    x1126 = -x1111
    x1127 = x1125 + x1126 - 3*x13*x27*x41*x7 + x27*x395
    x1128 = x171*(-x1082 - x1103*x7 - x1117 - x1118 - x1119*x275 - x1120*x380 - x1124 - x1127 + 3*x13*x27*x320*x47*x6*x9 + 3*x13*x27*x41*x9 + 4*x13*x37*x5*x7*x9 + 4*x27*x29*x320*x37*x6*x9 + 2*x27*x29*x47*x9 + 2*x320*x322*x37*x5*x6 + x322*x47*x5 + 3*x47*x48*x5*x7*x9 - x473*x5 - x5*x920)
    x1129 = x5*x967
    x1130 = x210*x94
    x1131 = 24*x374
    x1132 = x210*x98
    x1133 = x1049*x364
    x1134 = x1017*x27
    x1135 = x210*x418
    x1136 = x210*x460
    x1137 = x147*x27
    x1138 = x1137*x41
    x1139 = -x1138
    x1140 = x210*x415
    x1141 = x1137*x382
    x1142 = -x1141
    x1143 = x1139 + x1140 + x1142 + x948
    x1144 = 3*x10
    x1145 = x1144*x417
    x1146 = x327*x397
    x1147 = x1146*x262
    x1148 = x27*x377
    x1149 = x1148*x279
    x1150 = x144*x210
    x1151 = x1150 + x383
    x1152 = -x1145 + x1147 + x1149 + x1151 + x718 + x922
    x1153 = -x1133 - x1134 + x1135 - x1136 + x1143 + x1152
    x1154 = x27*x84
    x1155 = x466*x55
    x1156 = x1154*x61 + x1155*x127 + x930
    x1157 = x210*x252
    x1158 = x1157*x126
    x1159 = x27*x45
    x1160 = x1159*x41
    x1161 = x252*x380
    x1162 = x1161*x704
    x1163 = x1159*x382
    x1164 = -x1158 + x1160 - x1162 + x1163 + x965
    x1165 = x171*(-12*x1130 - x1131*x1132 - x1153 - x1156 - x1164 + 75*x118*x27*x47*x5*x7*x9 + 6*x27*x33*x48*x5*x7*x9 + 36*x27*x37*x42*x5*x7*x9 - x938)
    x1166 = x1125*x286
    x1167 = x502*x87
    x1168 = x27*x524
    x1169 = x150*x289
    x1170 = x1033*x289
    x1171 = x5*x969
    x1172 = x49*x5
    x1173 = x114*x1172*x502
    x1174 = Y3*x520
    x1175 = x1174*x350
    x1176 = x1175*x27
    x1177 = x5*x959
    x1178 = x122*x287
    x1179 = x1178*x27
    x1180 = x5*x9
    x1181 = 9*x502
    x1182 = x1083*x289
    x1183 = x313 + x995
    x1184 = x27*x529
    x1185 = x1184*x4
    x1186 = -2*x75
    x1187 = x22*x704
    x1188 = x27**2
    x1189 = x1188*x37
    x1190 = x1189*x486
    x1191 = 4*x1188
    x1192 = x1191*x94
    x1193 = 8*x1130
    x1194 = x1193*x26
    x1195 = x1160*x26
    x1196 = x67*x9
    x1197 = x26*x351
    x1198 = -x1196 + x1197
    x1199 = x569 - x709
    x1200 = x1199 - x725 - x728
    x1201 = x1188*x393
    x1202 = x210*x67
    x1203 = x1138*x26
    x1204 = -x720
    x1205 = x26*x718
    x1206 = x1204 + x1205
    x1207 = x1202 - x1203 + x1206
    x1208 = x1201*x26 + x1207 - x713
    x1209 = -x273
    x1210 = x704*x90
    x1211 = x224*x37
    x1212 = x6*x94
    x1213 = x1188*x165
    x1214 = x1144*x115
    x1215 = x113*x279
    x1216 = x1188*x126
    x1217 = x140*x210
    x1218 = 10*x43
    x1219 = x1189*x6
    x1220 = x1150*x41
    x1221 = x126*x210
    x1222 = x143*x210
    x1223 = x1222 + x349
    x1224 = x230*x70
    x1225 = x123*x262
    x1226 = -x1050 + x108*x659 + x120*x659 + x1224 + x1225*x43 + x153 + x608 - x750
    x1227 = x172*x210
    x1228 = x1201*x6
    x1229 = -x751
    x1230 = 8*x1212*x210
    x1231 = x1137*x97
    x1232 = x1159*x97
    x1233 = -x1137 + x650
    x1234 = x1159 - x1231 + x1232 + x1233 + x734
    x1235 = x350 + x609
    x1236 = 6*x1188*x13*x37*x6*x9 + 4*x1188*x47*x48*x6*x9 - x1228 - x1229 - x1230 - x1234 - x1235 - x742 - x760 - x764 - x777
    x1237 = x10*x172
    x1238 = 2*x593
    x1239 = 6*x593
    x1240 = x1239*x9
    x1241 = -x349
    x1242 = x151*x594
    x1243 = x383*x555
    x1244 = x31**(-5)
    x1245 = x555*x6
    x1246 = -35*x10*x118*x556*x6*x9 - 35*x10*x20*x9 - 20*x10*x48*x558*x6*x9 + x1241 + x1242 + x1243 + 8*x1244*x664 + x1245*x658*x90 + x203*x557*x658 - 3*x29*x556*x6
    x1247 = x1242*x9
    x1248 = x10*x1242
    x1249 = 12*x102
    x1250 = x605 + x75
    x1251 = -3*Y3*x10*x13*x24*x530*x555
    x1252 = x565*x627
    x1253 = Y3*x571
    x1254 = -3*Y3*x13*x24*x530*x555*x9 + x1253
    x1255 = -6*Y3*x10*x24*x29*x530*x558*x9 - 15*Y3*x10*x24*x48*x530*x556*x9 - 2*Y3*x10*x24*x530*x557*x75 - Y3*x24*x322*x530*x556 - 2*Y3*x24*x530*x557*x75*x9 + x114*x1252 + x1144*x1252 + x1251 + x1254 + x590*(x10*x1243 - x10*x385*x555 - x114*x599 - x1144*x599 + x1239*x658 + x1243*x9 + x1247 + x1248 - x1249*x557*x658 + x1250 + x607 + x637*x659 + x746 + x765) + x629*x765 + x633*x658
    x1256 = -x642*x658
    x1257 = x1144*x311
    x1258 = x1257*x308
    x1259 = x643 + x995
    x1260 = 2*x170
    x1261 = x1260*x530
    x1262 = x42*x653
    x1263 = x5*x905
    x1264 = 14*x15
    x1265 = x262*x667
    x1266 = x35*x653
    x1267 = x1266*x6
    x1268 = x183*x5
    x1269 = x231*x653
    x1270 = x41*x84
    x1271 = x1270*x6
    x1272 = x27*x736
    x1273 = x1272*x41
    x1274 = x258*x27
    x1275 = x1274 + x84
    x1276 = -x1269 + x1271 + x1273 + x1275
    x1277 = -x1267 + x1268 + x1276 + 7*x156 + x27*x773 - x676 + x684
    x1278 = x66*x9
    x1279 = x1278*x5
    x1280 = x252*x27
    x1281 = x1280*x658
    x1282 = x203*x5
    x1283 = x126*x653
    x1284 = 24*x6
    x1285 = x1284*x668
    x1286 = x1056 + x1120
    x1287 = x1057 + x1083 - x1279 - x1281*x97 - x1281 - x1282*x41*x9 + x1283*x209 + x1283*x256 + x1285*x43 + x1286 - x264*x660
    x1288 = x171*(x1055 - x1262*x423*x76 + 6*x1263 + x1264*x442*x5 + x1265*x219 + x1265*x222 + x1277 + x1287 + x139*x670*x683 + x168 - x206*x663*x671 - x209*x672 + x217*x423*x5 + 8*x276 - x670*x726 - 27*x96 - 16*x99)
    x1289 = x350 + x650
    x1290 = x26*x774
    x1291 = x1134*x26
    x1292 = x35*x695
    x1293 = x1292*x26
    x1294 = x343*x683
    x1295 = x1294*x8
    x1296 = x1295*x26
    x1297 = x26*x410
    x1298 = x139*x152
    x1299 = x1298*x26
    x1300 = 2*x354
    x1301 = x1196 - x1197 - x1300*x26 + x721
    x1302 = x1297 + x1299 + x1301 + x709
    x1303 = x139*x880
    x1304 = x1294*x218
    x1305 = x584 - x775
    x1306 = x157*x27
    x1307 = x1137 + x1231 + x1306
    x1308 = x1159 + x1230 + x1232 + x1303 + x1304 - x1305 - x1307 - x589 - x610 + x734 - x753 + x827
    x1309 = x304*x9
    x1310 = x1303 - x588 + x775
    x1311 = x1235 + x1310 + x174*x202 - x587 + x771 + x781 + x827
    x1312 = x784*x9
    x1313 = Y3*x792
    x1314 = x289*x410
    x1315 = x1138*x289
    x1316 = -x285*x786 - x289*x351 + x791
    x1317 = -X3*(x1187 - x1194 - x1195 - x1202 + x1203 - x1205 - x1290 + x1291 - x1293 - x1296 + x1302 + x733) - 2*Y3*x10*x13*x14*x24*x37*x4*x8 - 6*Y3*x10*x14*x24*x29*x33*x4*x8 - 2*Y3*x10*x24*x37*x4*x75 - 15*Y3*x24*x27*x4*x41*x42*x5*x9 - 8*Y3*x24*x27*x4*x47*x48*x5*x9 + x1298*x289 - 2*x1308*x170 + x1308*x171 + x1309 + x1311*x171 + x1312*x210 - x1313 + x1314 + x1315 + x1316 - x170*x4*(-12*x1212*x210 - x1234 + x1306 - x757 - x763 - x778) - 3*x27*x303*x5 + x287*x710 + x796
    x1318 = x27*x990
    x1319 = x27*x309
    x1320 = x1319*x349
    x1321 = Y3*x1320
    x1322 = x308 - x994
    x1323 = X3*x1032
    x1324 = x27*x497
    x1325 = x1324*x826
    x1326 = x390*x5
    x1327 = 2*x826
    x1328 = x1326*x1327
    x1329 = Y3*x44
    x1330 = 2*x1117
    x1331 = x27*x41*x486
    x1332 = x5*x847
    x1333 = m13*x4
    x1334 = x10*x42
    x1335 = 45*x1334
    x1336 = x1188*x66
    x1337 = x27*x654
    x1338 = x1336*x6
    x1339 = x5**4
    x1340 = x1339*x6
    x1341 = x27*x653
    x1342 = x1341*x6
    x1343 = x102*x1341
    x1344 = x1188*x262
    x1345 = x1335*x6
    x1346 = x1345*x41
    x1347 = -x1346 + x622
    x1348 = -36*x113*x1262 - 18*x1188*x198 - x1188*x666 + x1220 + x1222 - x1335 - x1336 - x1337*x97 - x1337 - x1338*x41 + x1338*x683 + x1340*x209 + x1340*x256 + x1340*x614 - x1342*x209 - x1342*x264 - x1343*x206 + x1344*x219 + x1344*x222 + x1347 - 28*x199 + x210*x617 + x212*x621 + 26*x216 + x625 - 42*x738 - x880
    x1349 = x1348*x171
    x1350 = x5*x82
    x1351 = x10*x1005
    x1352 = 6*x87
    x1353 = x1332*x26
    x1354 = x152*x27
    x1355 = x1354*x26
    x1356 = x428*x653
    x1357 = 3*x71
    x1358 = x1107*x26
    x1359 = x559*x668
    x1360 = x1274*x41
    x1361 = x104*x195
    x1362 = x10*x27
    x1363 = x1362*x35
    x1364 = x10*x1110
    x1365 = x1172*x1191
    x1366 = x1189*x84
    x1367 = x102*x668
    x1368 = 4*x1367
    x1369 = -x1368
    x1370 = x230*x71
    x1371 = x1332*x6
    x1372 = x1189*x761
    x1373 = x1213*x5
    x1374 = x176*x199
    x1375 = x27*x880
    x1376 = x104*x738 + x1276 + x1369 - x1370 + x1371 - x1372 - x1373 + x1374 + x1375 + x155 + 6*x156
    x1377 = x1058 + x1376
    x1378 = -x171*x687
    x1379 = x27*x740
    x1380 = x1249*x27
    x1381 = x1216*x5
    x1382 = -x1059 - x1277
    x1383 = x1354*x289
    x1384 = x1107*x289
    x1385 = x1188*x293
    x1386 = Y3*x84
    x1387 = -X3*(-x1016 - x1270*x26 + x1350 + x1351 - x1352*x26 - x1353 + x1355 + x1356*x26 + x1357*x26 + x1358 + x1359*x26 - x1360*x26 - x1361*x26 - x1363*x26 - x1364*x26 + x1365*x26 + x1366*x26) - 2*Y3*x10*x13*x24*x27*x37*x4 - 6*Y3*x10*x24*x27*x29*x33*x4 - 15*Y3*x10*x24*x27*x4*x41*x42 - 8*Y3*x10*x24*x27*x4*x47*x48 - 6*Y3*x13*x24*x4*x41*x5 - 6*Y3*x24*x29*x4*x47*x5 - 4*Y3*x24*x37*x4*x5*x75 + x1056 + x1172*x1385 + x1189*x1386*x286 + x1356*x289 + x1357*x289 - 2*x1377*x170 + x1377*x171 + x1378 - x1382*x170*x4 + x1383 + x1384 + x171*(-x1102*x125 - 36*x112*x43*x683 + x1287 + x1338*x5*x61 + x1376 + x1379 + x1380*x61 + x1381*x219 + x1381*x222 + 15*x276 - x661 - x665 - 30*x96 - 24*x99) - 3*x27*x303 + x27*x785 + x5*x867 + x668*x795
    x1388 = x798*x8
    x1389 = x210*x338
    x1390 = x1214*x26
    x1391 = x10*x26
    x1392 = x1146*x1391
    x1393 = x75*x900
    x1394 = x10*x1393
    x1395 = x1137*x331
    x1396 = x1215*x26
    x1397 = x1220*x26
    x1398 = x1041 - x1050*x26 - x1389 - x1390 + x1392 + x1394 - x1395 + x1396 + x1397 - x210*x901 + x214*x906 + x915
    x1399 = x653*x7
    x1400 = x1399*x256
    x1401 = x437*x5
    x1402 = x1280*x262
    x1403 = x440*x5
    x1404 = x373*x443
    x1405 = x330*x761
    x1406 = x27*x933
    x1407 = x446*x671
    x1408 = x206*x327
    x1409 = x1334*x27
    x1410 = x10*x1280
    x1411 = x1410*x380
    x1412 = x1272*x330
    x1413 = -x1362*x465 + x237*x668 + x465*x653 - x674*x683
    x1414 = x171*(-x1021 + x108*x1406 + x1115 - x1262*x430 + x1266 - x1270 + x1282 + x1356 - x1360 - x1362*x228 - x1399*x209 - x1400 + x1401 + x1402 - x1403 - x1404*x5 - x1405 + x1406*x450 + x1407 + x1408*x671 + x1409*x448 + x1411 - x1412 + x1413 - x27*x928 + x435*x55 + x436*x5 - 7*x87)
    x1415 = -x1153
    x1416 = x953 + x964
    x1417 = -x1416*x171
    x1418 = x210*x956
    x1419 = x286*x774
    x1420 = x10*x75
    x1421 = x1420*x500
    x1422 = x1181*x729
    x1423 = x293*x37
    x1424 = x1423*x327
    x1425 = x524 + x969 - x970 - x971
    x1426 = x1425 + x383 + x790 + x794 + x997
    x1427 = x1415*x171
    x1428 = x327*x683
    x1429 = x1428*x287
    x1430 = x1220*x289
    x1431 = x216*x287
    x1432 = x1137*x1174 + x1144*x505 - x1427 - x1429 - x1430 - x1431
    x1433 = x27*x820
    x1434 = 14*Y3*x808
    x1435 = X3*x143
    x1436 = x1435*(x1434 - x815)
    x1437 = Y3*x813
    x1438 = x143*x1437*x27
    x1439 = x323*x326
    x1440 = x1439*x5
    x1441 = x157*x826
    x1442 = x27*x341
    x1443 = x10*x806
    x1444 = x262*x803
    x1445 = x1443*x308 - x1444
    x1446 = x10*x956
    x1447 = x10*x355
    x1448 = x10*x565
    x1449 = x1446 - x1447*x992 + x1448*x988 + x258*x986 - x945*x991
    x1450 = x1001 + x1449 + x817*(-x1445 - x996)
    x1451 = x1011*x6
    x1452 = x14*x341
    x1453 = x1452*x26
    x1454 = x331*x349
    x1455 = x327*x56
    x1456 = x14*x76
    x1457 = x26*x323
    x1458 = x19*x26
    x1459 = x1038*x26
    x1460 = -30*Y3*x42*x6*x8 + x1459 - x25*x320*x4*x47*x75*x8
    x1461 = x203*x9
    x1462 = x1278*x380
    x1463 = 8*x7
    x1464 = x137*x1463
    x1465 = 10*x377
    x1466 = x1146*x423
    x1467 = x139*x472
    x1468 = x1298 - 6*x13*x14*x37*x7*x8 - 4*x14*x47*x48*x7*x8 + x1466 + x1467 + x410
    x1469 = x348 + x399
    x1470 = x1469 + x384
    x1471 = -x470 - x473
    x1472 = 8*x417
    x1473 = 4*x417
    x1474 = 2*x493
    x1475 = x14*x497
    x1476 = x349*x41
    x1477 = x1476*x28
    x1478 = x14*x475
    x1479 = x152*x19
    x1480 = x348*x8
    x1481 = -x1480 + x380*x874 - x395*x8 + x508
    x1482 = -x1146*x220 + x14*x481 + x1452*x6 + x1455*x6 + x1474 + x1475 + x1477 + x1478 - x1479 + x1481 - x161 - x19*x472 + x28*x388 - x380*x62 - x380*x868 - x499 - x873
    x1483 = x171*(-x1472*x28 + x1473*x19 + x1482 + x463*x7 - 6*x511)
    x1484 = x15*x631
    x1485 = x41*x62
    x1486 = x41*x868
    x1487 = x330*x873
    x1488 = x374*x38
    x1489 = x19*x66
    x1490 = x414*x8
    x1491 = x1490*x41
    x1492 = -3*x13*x320*x47*x6*x8 - 3*x13*x41*x8 + x1472*x8 + x1491 - 4*x29*x320*x37*x6*x8 - 2*x29*x47*x8 + x822
    x1493 = x171*(24*x103*x14*x29*x320*x6*x9 + 72*x118*x28*x47*x7 - x1284*x1488 + 18*x13*x14*x37*x7 - x14*x1404 + 6*x14*x29*x33*x9 + 6*x14*x320*x37*x48*x6*x9 + 30*x14*x41*x42*x7 + 30*x14*x42*x6 - x14*x440 + 28*x14*x47*x48*x7 + 3*x14*x47*x48*x9 - x14*x77 - x1485 - x1486 - x1487 - x1489*x377 - x1492 - x161*x330 + 105*x20*x28*x41*x7 + 105*x20*x28*x6 - x219*x445 - x222*x445 + 30*x28*x37*x42*x7 - x468 - x871 - x872)
    x1494 = x1474*x26
    x1495 = x1475*x26
    x1496 = x1174*x349
    x1497 = x19*x501
    x1498 = x115*x19
    x1499 = x1480*x26
    x1500 = x524*x8
    x1501 = x1038*x289 + x1499 - x1500 - x892
    x1502 = -x300
    x1503 = x1502*x304
    x1504 = x1503*x4
    x1505 = x27*x909
    x1506 = x1069*x5
    x1507 = x61*x677
    x1508 = x159*x26
    x1509 = -30*Y3*x42*x5*x6 + x1508 - x25*x320*x4*x47*x5*x75
    x1510 = x27*x472
    x1511 = x414*x5
    x1512 = x1511*x41
    x1513 = -3*x13*x320*x47*x5*x6 - 3*x13*x41*x5 + x145 + x1472*x5 + x1512 - 4*x29*x320*x37*x5*x6 - 2*x29*x47*x5
    x1514 = x27*x390
    x1515 = x27*x354
    x1516 = x27*x470
    x1517 = x158*x9
    x1518 = 2*x61
    x1519 = x147*x6
    x1520 = x1069*x6
    x1521 = x348*x5
    x1522 = x147*x380 + x1519 - x1521 - x395*x5
    x1523 = -x1113*x1518 + x1330 + x1514 - x1515 - x1516 + x1517 + x1519*x330*x9 + x1520*x5 + x1522 + x27*x398 - x27*x473 - x380*x45 - x45*x6
    x1524 = x171*(x1087*x7 - x1463*x95 + x1523 + x27*x487 - x7*x72)
    x1525 = x49*x933
    x1526 = 8*x1525
    x1527 = x1049*x327
    x1528 = x1527*x6
    x1529 = x1473*x210
    x1530 = x61*x7
    x1531 = x1091*x210
    x1532 = x1093*x210
    x1533 = x210*x472
    x1534 = x1221*x1408 - x1533 + x705 - x712
    x1535 = x10*x330
    x1536 = -x1131*x262*x61 + x1161*x658 + x1530*x250 - x1535*x385 + x252*x659 + x264*x932 - x41*x765 - x767
    x1537 = x171*(-x1041*x1530 + x114*x729 + x1154*x377 + x1156 + x1221*x446 - x1526 + x1528 + x1529 - x1531*x219 - x1531*x222 - x1532 + x1534 + x1536 - x710 + x719 + x952 + x966)
    x1538 = x1514*x26
    x1539 = x1330*x26
    x1540 = x150*x287
    x1541 = x41*x502
    x1542 = 8*x502
    x1543 = x1099*x501
    x1544 = x293*x898
    x1545 = x1521*x26
    x1546 = x5*x524
    x1547 = -x1386 + x1545 - x1546 + x158*x502
    x1548 = -x9*x911
    x1549 = x808 - 1
    x1550 = x1549*x354
    x1551 = x1550*x26
    x1552 = x320**2
    x1553 = x1552*x470
    x1554 = x1553*x26
    x1555 = x1549*x470
    x1556 = x1555*x26
    x1557 = x1552*x322
    x1558 = x107*x1557
    x1559 = x1558*x9
    x1560 = x1559*x26
    x1561 = 8*x366
    x1562 = x26*x387
    x1563 = x67*x7
    x1564 = x26*x341
    x1565 = x1564*x6
    x1566 = -3*x13*x25*x4*x41*x7 - x1549*x25*x322*x4*x47 - 2*x1552*x25*x317*x37*x4 + x1563 + x1565 - x224
    x1567 = x330*x401
    x1568 = x6**3
    x1569 = x1568*x37
    x1570 = x1568*x9
    x1571 = x1568*x90
    x1572 = x1571*x9
    x1573 = 2*x122
    x1574 = x1549*x1573
    x1575 = x1552*x740
    x1576 = x1552*x182
    x1577 = x1576*x9
    x1578 = x143*x1568
    x1579 = x1578*x41
    x1580 = 8*x1568
    x1581 = x1580*x49
    x1582 = 6*x624
    x1583 = x1549*x70
    x1584 = x1583*x6
    x1585 = x1558*x6
    x1586 = x153*x1552
    x1587 = x153*x1549
    x1588 = x237*x7
    x1589 = x1588*x330
    x1590 = x1090*x327
    x1591 = -x1439 - x1579 - x1581 + x1582 - x1584 - x1585 - x1586 - x1587 + x1589 + x1590 - x341 + x349 - x414
    x1592 = x1591 + x622
    x1593 = -x13 + x172*x7
    x1594 = x41*x531
    x1595 = x341*x9
    x1596 = x1568*x41
    x1597 = x330*x486
    x1598 = x44*x7
    x1599 = x1598 + x607
    x1600 = x1552*x37
    x1601 = 2*x318
    x1602 = -x391
    x1603 = x1602 + x75
    x1604 = -x1476*x1568 - x1549*x582 - x1600*x1601 + x1603 + x341*x7 + x477*x6 - x841
    x1605 = x171*(x126*x1558 - x1530*x370 + x1549*x576 + x1549*x581 + x1552*x581 + x1580*x94 - x1594*x6 + x1595 + x1596*x44 - x1597*x7 + x1599 + x1604 - 6*x576 + x825)
    x1606 = x1091*x252
    x1607 = 12*x327
    x1608 = x1607*x61
    x1609 = x368*x75
    x1610 = x1609*x367
    x1611 = x1568*x66
    x1612 = x1570*x41
    x1613 = x1549*x740
    x1614 = x1577*x206
    x1615 = x171*(-x116*x1549 - x126*x1552*x217 + 36*x13*x320*x33*x7*x9 + 18*x13*x37*x6*x9 - x1549*x756 - x1552*x756 - x1570*x264 - x1591 - x1597 - x1606 - x1608 - x1610 - x1611*x61 - x1612*x252 - x1613 - x1614 + 48*x320*x37*x48*x7*x9 + 30*x320*x42*x47*x7*x9 + x44 + 36*x47*x48*x6*x9 - x623)
    x1616 = x323*x339*x61
    x1617 = x26*x827
    x1618 = Y3*x7
    x1619 = x1618*x286
    x1620 = 8*x94
    x1621 = Y3*x224
    x1622 = x1621*x520
    x1623 = x26*x583
    x1624 = x317*x520
    x1625 = x1549*x390
    x1626 = x1625*x286
    x1627 = Y3*x1626
    x1628 = x289*x392
    x1629 = x1600*x287*x317
    x1630 = x1621 - x1623 - x1624 - x1627 - x1628 - x1629 + x286*x583 + x317*x331 + x341*x502 + x391 - x476
    x1631 = x300*x309
    x1632 = 3*x311
    x1633 = x1502*x1631*x1632
    x1634 = x1502*x300*x642
    x1635 = x4*x647
    x1636 = x151 - x1588
    x1637 = x285 + x811 + x814
    x1638 = 4*x826
    x1639 = x1621 + x837 + x839
    x1640 = x1502*x529 + x1639 + x647 + x833 - x842
    x1641 = x161*x37*x8
    x1642 = -x1300 + x348 + x352 + x386
    x1643 = x1642 - 4*x29*x320*x37*x6*x9 + x400
    x1644 = -x1468 - x1561 - x1643
    x1645 = x139*x1473
    x1646 = x139*x933
    x1647 = x139*x262
    x1648 = x1292 - x1298 + x1408*x1647 - x1467
    x1649 = x171*(x1300 - x139*x250*x377 + x1416 - x1466 + x1520 + x1536 - x1561 + x1645 - x1646*x219 - x1646*x222 + x1647*x446 + x1648 + x174*x201 + x377*x929 - x410 + x489 + x931)
    x1650 = x139*x75
    x1651 = x1650*x500
    x1652 = x327*x968
    x1653 = x293*x905
    x1654 = X3*(-x1069*x26 - x1080 - x1084 + 2*x14*x25*x29*x320*x37*x4*x8 + 6*x14*x25*x320*x33*x4*x75*x8 - x1641*x26 + 15*x25*x4*x41*x42*x6*x9 + 8*x25*x4*x47*x48*x6*x9 - x26*x752 - x914) + x1175 + x1260*x1644 + x1302 - x1312*x1502 - x139*x1652 + x1503 + x1544 - x1620*x502 + x1641*x289 - x1644*x171 - x1649 - x1651 + x1653 - x289*x766
    x1655 = x41*x674
    x1656 = x6*x675
    x1657 = x1656*x330
    x1658 = x250*x27
    x1659 = x171*(24*x10*x103*x27*x29*x320*x6 + 6*x10*x27*x29*x33 + 6*x10*x27*x320*x37*x48*x6 + 3*x10*x27*x47*x48 - x113*x443 + 72*x118*x47*x653*x7 - x1285*x374 + 18*x13*x27*x37*x7 - x1406*x219 - x1406*x222 - x1413 - x1513 - x1655 - x1657 - x1658*x377 + 105*x20*x41*x653*x7 + 105*x20*x6*x653 + 30*x27*x41*x42*x7 + 30*x27*x42*x6 - x27*x440 + 28*x27*x47*x48*x7 - x27*x77 - x330*x677 + 30*x37*x42*x653*x7 - x680 - x681 - 7*x71)
    x1660 = x1417 + x973
    x1661 = x10*x338
    x1662 = x331*x715
    x1663 = x210*x26
    x1664 = -6*x13*x27*x37*x5*x7 + x1532 + x1533 - 4*x27*x47*x48*x5*x7 + x710 + x712
    x1665 = -x716
    x1666 = x384 + x736
    x1667 = x1665 + x1666 - x719
    x1668 = x1469 + x950 - x951
    x1669 = -4*x10*x29*x320*x37*x6 + x1667 + x1668
    x1670 = -x1526 - x1664 - x1669
    x1671 = 8*x195
    x1672 = x1174*x715
    x1673 = x1428*x293
    x1674 = x210*x75
    x1675 = x1674*x500
    x1676 = x214*x293
    x1677 = X3*(15*x10*x25*x4*x41*x42*x6 + 8*x10*x25*x4*x47*x48*x6 - x1527*x26 - x165*x1663 - x1661 - x1662 + 2*x25*x27*x29*x320*x37*x4*x5 + 6*x25*x27*x320*x33*x4*x5*x75 - x26*x37*x762 - x914) + x1154*x37*x502 + x1260*x1670 - x1502*x785 + x1503 - x1537 - x1541*x258 - x1652*x210 - x1670*x171 - x1671*x502 + x1672 + x1673 - x1675 + x1676 + x723
    x1678 = x300**3
    x1679 = 5*x808
    x1680 = x1568*x803
    x1681 = x1679*x309 + x1680 + x307 - x809 - x982 - 1
    x1682 = -x1549
    x1683 = 4*x557
    x1684 = x1683*x987
    x1685 = x319**2
    x1686 = x1685*x317
    x1687 = x319*x556
    x1688 = x1687*x355*x6
    x1689 = x1000 - x1588*x991 - x1684*x1686 + x1688*x987 + x414*x986
    x1690 = -x1563 + x569
    x1691 = x1690 + x224
    x1692 = 15*x1678*x783 - x1681*x817 + 2*x1682*x169*x3*x322*x556 - x1689 - x1691 - x985
    x1693 = x152*x1552
    x1694 = x1693*x26
    x1695 = x152*x1549
    x1696 = x1695*x26
    x1697 = x1558*x26
    x1698 = x1241 + x414
    x1699 = x1439 + x1579 + x1581 - x1582 + x1584 + x1585 + x1586 + x1587 - x1589 - x1590 + x1698 + x341 - x622
    x1700 = x1699*x171
    x1701 = x252*x933
    x1702 = x330*x945
    x1703 = x1607*x683
    x1704 = 12*x1609
    x1705 = x10*x1704
    x1706 = x10*x1568
    x1707 = x1596*x941
    x1708 = x1214*x1549
    x1709 = x10*x224
    x1710 = x1549*x880
    x1711 = x10*x1576
    x1712 = x1711*x206
    x1713 = x171*(36*x10*x13*x320*x33*x7 + 18*x10*x13*x37*x6 + 48*x10*x320*x37*x48*x7 + 30*x10*x320*x42*x47*x7 + 36*x10*x47*x48*x6 - x1347 - x1549*x224*x683 - x1552*x217*x262 - x1569*x250 - x1591 - x1600*x1709 - x1701 - x1702 - x1703 - x1705 - x1706*x264 - x1707 - x1708 - x1710 - x1712 + x258)
    x1714 = x286*x6
    x1715 = x123*x327
    x1716 = x304 + x911
    x1717 = x332 + x909 - x910 - x912
    x1718 = x8*(X3*(210*Y3*x20*x7 + 6*x13*x25*x320*x4*x47*x6 + 3*x13*x25*x4*x41 - x1472*x26 - x1583*x26 - x1694 - x1696 - x1697 - x203 + 8*x25*x29*x320*x37*x4*x6 + 2*x25*x29*x4*x47 - x26*x415 - x67) + Y3*x1549*x24*x29*x4*x47 + 2*Y3*x1549*x24*x37*x4*x75 + 6*Y3*x1552*x24*x322*x33*x4 + 2*Y3*x1552*x24*x37*x4*x75 + 15*Y3*x24*x4*x41*x42*x7 + 8*Y3*x24*x4*x47*x48*x7 - x1476*x289 - x1502*x956 - x1615 - x1622 + 2*x1699*x170 - x1700 - x1713 - x1714*x393 - x1715*x502 - x1716 - x1717 + 2*x24*x320*x322*x37*x4 + x24*x320*x4*x47*x75 - x286*x608 - x287*x70 - x414 + x478)
    x1719 = -2*Y3 + x813
    x1720 = x1435*(-x1434 - x1719)
    x1721 = x319*x322
    x1722 = x1683*x1721
    x1723 = 15*Y3*x308*x42*x6 + 3*x13*x308 + 4*x169*x29*x3*x556*x6 + 2*x169*x3*x319*x556*x75 - x1716 - x1720 - x1722*x987 - x224*x991 + 15*x301*x783
    x1724 = x14*x653
    x1725 = x14*x681
    x1726 = x14*x49
    x1727 = 8*x653
    x1728 = x1726*x1727
    x1729 = x1363*x8
    x1730 = x174*x49
    x1731 = x1730*x653
    x1732 = 4*x668
    x1733 = x1732*x434
    x1734 = 4*x201
    x1735 = x1734*x27
    x1736 = x63*x683
    x1737 = x1731*x26 + x1733*x26 + x1735*x26 + x1736*x26
    x1738 = -30*x10*x14*x42
    x1739 = x1339*x90
    x1740 = x14*x1739
    x1741 = x153*x8
    x1742 = x8*x880
    x1743 = 10*x200
    x1744 = x1340*x14
    x1745 = x1262*x8
    x1746 = x1341*x218
    x1747 = x1237*x14
    x1748 = x115*x653
    x1749 = -x112*x1734 - x1368*x8 - x174*x1748 - x27*x780
    x1750 = x1036 + x1375*x8 + x14*x675 + x14*x682 + x140*x1724 + x1749 + x176*x200 + x186
    x1751 = x1734*x6
    x1752 = 2*x200
    x1753 = x1294*x6
    x1754 = -x1752 + x1753
    x1755 = x171*x52
    x1756 = x293*x434*x668
    x1757 = x1731*x289
    x1758 = x1736*x289
    x1759 = x201*x27*x293
    x1760 = x287*x683
    x1761 = 2*X2
    x1762 = 2*Y2
    x1763 = x309*x5
    x1764 = x1065*x653 - x1761 + x1762 + x1763
    x1765 = x4*x818
    x1766 = x14*x1527
    x1767 = x26*x863
    x1768 = -x1767
    x1769 = -x1392*x8
    x1770 = x1043*x26
    x1771 = -x1753*x26 + x1768 + x1769 + x1770 + x316
    x1772 = x325*x397
    x1773 = x10*x16*x331 + x14*x1661 + x1772 - x26*x260
    x1774 = x152*x8
    x1775 = x174*x417
    x1776 = x1334*x8
    x1777 = x8*x933
    x1778 = x1093*x8
    x1779 = x14*x933
    x1780 = x1334*x14
    x1781 = x1225*x374
    x1782 = x374*x397
    x1783 = x262*x8
    x1784 = x10*x368
    x1785 = x161*x1784
    x1786 = -x1294 + x1784*x233 - x1785 + x533*x683
    x1787 = x718*x8
    x1788 = x774*x8
    x1789 = x37*x933
    x1790 = x1726*x933
    x1791 = x512 + x513
    x1792 = x171*(3*x10*x13*x14*x320*x47*x6 + 3*x10*x13*x14*x41 + 4*x10*x13*x37*x7*x8 + 4*x10*x14*x29*x320*x37*x6 + 2*x10*x14*x29*x47 + 3*x10*x47*x48*x7*x8 - x1147*x8 - x14*x950 - x1787 - x1788 - x1789*x343 - 9*x1790 - x1791 - x259*x6 + 2*x320*x322*x37*x6*x8 + x322*x47*x8 - x517 - x8*x947)
    x1793 = x1417*x8
    x1794 = x324*x968
    x1795 = x174*x195*x502
    x1796 = Y3*x10
    x1797 = x16*x1796*x520
    x1798 = x327*x8
    x1799 = x1760*x1798
    x1800 = x519*x884
    x1801 = x1541*x259
    x1802 = x10*x1065
    x1803 = x1802 + x995
    x1804 = x14*x529
    x1805 = x1804*x4
    x1806 = x546*x945
    x1807 = x195*x856
    x1808 = -x714 + x717
    x1809 = x393*x542
    x1810 = x1204 + x693
    x1811 = x1810 + x692 - x697
    x1812 = -x1299 + x1809*x26 + x1811
    x1813 = -x1237
    x1814 = x695*x90
    x1815 = 5*x738
    x1816 = x262*x277
    x1817 = x148 + x349
    x1818 = x1809*x6
    x1819 = 6*x10*x13*x37*x542*x6 + 4*x10*x47*x48*x542*x6 - x1229 - x1304 - x1310 - x1818 - x739 - x747 - x758 - x770 - x776 - x779 - x782
    x1820 = x10*x1239
    x1821 = x1257 + x995
    x1822 = x14*x1446
    x1823 = x16*x309
    x1824 = Y3*x1823
    x1825 = X3*x16
    x1826 = x1475*x826
    x1827 = x390*x8
    x1828 = x1327*x1827
    x1829 = x719*x8
    x1830 = 4*x710
    x1831 = x210*x826
    x1832 = m11*x4
    x1833 = x1832*x5
    x1834 = x1174*x412
    x1835 = x114*x505 + x1834 - x927 - x959 - x961 - x963
    x1836 = x1333*x5
    x1837 = x14*x820
    x1838 = x1439*x8
    x1839 = 2*x226
    x1840 = x1839*x6
    x1841 = x343*x668
    x1842 = x258*x8
    x1843 = x1341*x90
    x1844 = x1843*x8
    x1845 = x1340*x8
    x1846 = x1012*x119
    x1847 = x1222*x8 + x874
    x1848 = x1038 + x1840 - x315 + x860
    x1849 = x1039 + x104*x197 + x1267*x14 + x1272*x829 + x1274*x8 + x1749 + x1841*x6 + x189
    x1850 = x1237*x8
    x1851 = x4*(x1319 + x1761 - x1762 + x1802*x27)
    x1852 = x1457*x76
    x1853 = x1527*x27
    x1854 = -30*x10*x27*x42 - 12*x13*x5
    x1855 = x1350*x6
    x1856 = x1271*x26
    x1857 = x327*x668
    x1858 = x341*x5
    x1859 = x1269*x26 - x1273*x26 + x1362*x338 - x1374*x26 + x1662*x27 + x1855 - x1856 - x1857*x339 + x1858*x26
    x1860 = x1339*x49
    x1861 = x10*x847
    x1862 = x1339*x277
    x1863 = x1339*x7
    x1864 = x108*x1863
    x1865 = x1341*x49
    x1866 = 12*x10
    x1867 = x1341*x7
    x1868 = x374*x668
    x1869 = x112*x1868
    x1870 = x40*x668
    x1871 = x368*x653
    x1872 = x1871*x677
    x1873 = x1339*x402 + x1339*x404 - x1870 - x1872
    x1874 = -x1150
    x1875 = x1134 - x1135 + x1136 + x1138 - x1140 + x1141 - x1149 + x1874
    x1876 = x171*x5
    x1877 = x1876*(-x483 - x953)
    x1878 = x653*x70
    x1879 = x152*x653
    x1880 = x497*x5
    x1881 = x323*x504
    x1882 = x1169 + x1519
    x1883 = 9*x1525
    x1884 = x171*(3*x10*x13*x27*x320*x47*x6 + 3*x10*x13*x27*x41 + 4*x10*x27*x29*x320*x37*x6 + 2*x10*x27*x29*x47 - x1110*x933 - 5*x1121 - x1123 - x1127 - x1272 + 4*x13*x37*x653*x7 - x1878 - x1879 - x1883*x27 - x27*x950 + 6*x320*x322*x37*x5*x6 + 2*x320*x47*x5*x6*x75 + 3*x322*x47*x5 - x380*x84 + 2*x41*x5*x75 + 3*x47*x48*x653*x7 - x472*x653 - x514*x668 - x761)
    x1885 = x199*x287
    x1886 = x1126 - x1168 + x1170
    x1887 = x1269*x289 - x1270*x502 - x1360*x502 + x1672*x27 - x1857*x287 + x1858*x289 - x1884 - x1885*x27 + x1886
    x1888 = x10*x478
    x1889 = 20*x1262
    x1890 = x1739*x27
    x1891 = x5**5
    x1892 = x1340*x27
    x1893 = x1339*x172
    x1894 = x1448*x567
    x1895 = x1709*x41
    x1896 = x1860*x6
    x1897 = x1893*x41
    x1898 = -x945
    x1899 = x1893 + x1898
    x1900 = 2*x1339*x198 - x1367*x176
    x1901 = -x10*x600
    x1902 = x1709*x555
    x1903 = -x1238*x1339 - x1250 + 4*x13*x1339*x557*x6 + 5*x1339*x42*x555*x6 - x1340*x597 - x1447*x594 - x1899 - x1901 - x1902
    x1904 = 15*x311
    x1905 = x210*x800
    x1906 = x210*x804
    x1907 = x210*x806*x813
    x1908 = x1067*x5
    x1909 = x210*x820
    x1910 = x1222*x1437
    x1911 = x10*x1439
    x1912 = x735*x826
    x1913 = x27*x826
    x1914 = x1271*x1913
    x1915 = x1319*x147 + x833
    x1916 = x8*x894
    x1917 = x14*x909
    x1918 = x1527*x8
    x1919 = x14*x472
    x1920 = x14*x390
    x1921 = x14*x718
    x1922 = x14*x774
    x1923 = x716*x8
    x1924 = x330*x508
    x1925 = x10*x1924 - x1147*x14 + x14*x398 - x14*x947 + x1481 + x1527*x218 + x1829 + x1920 - x1921 - x1922 + x1923 - x736*x8 - x829*x949
    x1926 = x171*(-x1526*x8 + x1789*x62 + 4*x1790 + x1925 - 2*x511)
    x1927 = x1920*x26
    x1928 = x1829*x26
    x1929 = x287*x315
    x1930 = x14*x1421
    x1931 = x293*x683
    x1932 = x112*x82
    x1933 = x1442*x26
    x1934 = x1732*x327
    x1935 = x27*x738
    x1936 = 4*x26
    x1937 = x250*x380
    x1938 = -x774 - x947
    x1939 = 4*x1525
    x1940 = 2*x1878
    x1941 = x1476*x653
    x1942 = x27*x475
    x1943 = x27*x718
    x1944 = x27*x774
    x1945 = x112*x341
    x1946 = -x1147*x27 + x1324 - x1362*x472 + x1522 - x1656 + x1934*x6 + x1940 + x1941 + x1942 - x1943 - x1944 + x1945 + x27*x481 - x380*x674 - x380*x675 + x388*x653 - x677
    x1947 = x171*(-6*x1122 - x1472*x653 + x1789*x674 + x1939*x27 + x1946)
    x1948 = x39*x631
    x1949 = x1940*x26
    x1950 = x1324*x26
    x1951 = x1362*x501
    x1952 = -x6*x714
    x1953 = x1549*x718
    x1954 = x1953*x26
    x1955 = x1552*x774
    x1956 = x1955*x26
    x1957 = x1549*x774
    x1958 = x1957*x26
    x1959 = x10*x1558
    x1960 = x1959*x26
    x1961 = x26*x950
    x1962 = x1334*x1569
    x1963 = x10*x1571
    x1964 = x10*x1600
    x1965 = 2*x1549
    x1966 = x1965*x199
    x1967 = x1552*x880
    x1968 = x10*x341
    x1969 = x746 + x949
    x1970 = x171*(x10*x1581 - x10*x622 + x1549*x734 + x1549*x775 + x1552*x775 + x1558*x262 + x1596*x258 + x1604 - x1702*x7 - x1715*x933 + x1911 + x1968 + x1969 - 6*x734)
    x1971 = x10*x909
    x1972 = x26*x735
    x1973 = x10*x1715
    x1974 = 2*x1927
    x1975 = x1827*x26
    x1976 = -2*x1975
    x1977 = 45*x43
    x1978 = x1977*x6
    x1979 = x13*x326
    x1980 = x237*x41
    x1981 = x252*x91
    x1982 = 22*x417
    x1983 = 12*x364
    x1984 = x358*x662
    x1985 = 57*x119
    x1986 = x14*x377
    x1987 = 12*x137
    x1988 = x1249*x368
    x1989 = x1091*x542
    x1990 = x224*x330
    x1991 = x382*x531
    x1992 = x139*x417
    x1993 = 18*x377
    x1994 = 22*x377
    x1995 = x1994*x542
    x1996 = 30*x369
    x1997 = x465*x542
    x1998 = x1100*x98
    x1999 = 16*x375
    x2000 = -x1917
    x2001 = 5*x26
    x2002 = x26*x542
    x2003 = x198*x339
    x2004 = x2003*x542
    x2005 = x1838*x26 + x193*x26
    x2006 = x688*x7
    x2007 = 24*x417
    x2008 = 12*x434
    x2009 = x228*x7
    x2010 = x1985*x445
    x2011 = 20*x377
    x2012 = x1987*x445
    x2013 = x1456*x459
    x2014 = x108*x542
    x2015 = x7*x8
    x2016 = x1607*x373
    x2017 = 12*x369
    x2018 = x219*x542
    x2019 = 22*x358
    x2020 = x108*x431 + x1104*x161 + x131*x1993 + x14*x2009 + x1408*x220 + x19*x1999 - x1919 - x1988*x28 - x1997*x8 - x2007*x8 - x2008*x377 - x2010 - x2011*x449 - x2012 - x2013 + x2014*x2015 + x2015*x2018 + x2016*x8 + x2017*x8 + x2019*x546*x8 - x218*x381*x542 - x255 + x344 + x377*x62 + x427 - x429 + x432 + x433 - x438 - x439 + x444 - x447 - x451 + x453 + x454 - x455 + x457 - x458 + x51 + x846 + x848 - x850 - x852 - x854 + x855 - x858 - x859
    x2021 = x10*x171
    x2022 = x198*x287
    x2023 = x2022*x542
    x2024 = x115*x891
    x2025 = -x26*x498 + x434*x631
    x2026 = -6*Y3*x13*x14 + x26*x494
    x2027 = -2*Y3*x14*x24*x320*x322*x37*x4 + x1927
    x2028 = 24*Y3
    x2029 = x4*x8
    x2030 = 6*x984
    x2031 = x43*x81
    x2032 = x226*x26
    x2033 = -x1484
    x2034 = x1495 + x1805 + x2033
    x2035 = x27*x7
    x2036 = x27*x431
    x2037 = x377*x5
    x2038 = x1114*x8 - 10*x13*x27*x37*x7*x8 - 15*x14*x41*x42*x5*x7 - 15*x14*x42*x5*x6 - 5*x14*x47*x48*x5*x7 + x17*x382 + x27*x441 - 6*x27*x47*x48*x7*x8 + x73 + x74 + x79
    x2039 = x1473*x27
    x2040 = -6*x13*x320*x47*x5*x6*x8 - 6*x13*x41*x5*x8 + x14*x2039 - 4*x14*x27*x29*x320*x37*x6 - 2*x14*x27*x29*x47 + x255*x5 + x27*x420 - 10*x29*x320*x37*x5*x6*x8 - 5*x29*x47*x5*x8 + x377*x85 + 21*x417*x5*x8 + x438*x5
    x2041 = 12*x55
    x2042 = x112*x19*x381 - 18*x118*x14*x27*x47*x7*x9 - 15*x118*x28*x47*x5*x7 + x127*x467 - 6*x14*x27*x33*x48*x7*x9 - 22*x14*x27*x37*x42*x7*x9 + x179*x2041*x368 - 6*x28*x33*x48*x5*x7 - 18*x28*x37*x42*x5*x7 + x447*x5 + x54 + x57 + x60 + x64
    x2043 = x454*x5
    x2044 = -x1505
    x2045 = x26*x41
    x2046 = x26*x343
    x2047 = x113*x2046*x8 + x167*x26 + x26*x281 - x667*x901
    x2048 = x210*x43
    x2049 = x7*x76
    x2050 = 12*x1095*x210
    x2051 = x1334*x139
    x2052 = 14*x377
    x2053 = x1646*x1985
    x2054 = x402*x933
    x2055 = -4*x13*x27*x37*x5*x7 + x1532 + x1533 + x1669 + x1883 + x2054 - 3*x27*x47*x48*x5*x7 + x710 + x712
    x2056 = x1988*x658
    x2057 = 18*x218
    x2058 = -6*x10*x33*x48*x7*x9 - 18*x10*x37*x42*x7*x9 - 18*x118*x14*x27*x47*x5*x7*x8 - 6*x14*x27*x33*x48*x5*x7*x8 - 22*x14*x27*x37*x42*x5*x7*x8 + x15*x2057*x210*x368 + x2056 + x210*x381*x423 + x724 + x727 + x731 + x732 - x935 + x936
    x2059 = 16*x10*x14*x320*x37*x48*x6*x8 + 8*x10*x14*x47*x48*x8 + 24*x103*x27*x29*x320*x5*x6*x9 + 6*x13*x27*x320*x33*x5*x6*x9 + 2*x13*x27*x37*x5*x9 - x1471 - x2048*x2049 - x2050 - x2051*x2052 - x2053 - x2055 - x2058 + 6*x27*x29*x33*x5*x9 + x354 - x425 + x699 - x917 - x918 + x920 - x940 - x942 + x943
    x2060 = x5*x67
    x2061 = -2*Y3*x24*x27*x320*x322*x37*x4 + x1538
    x2062 = -4*Y3*x14*x24*x27*x29*x320*x37*x4*x8 + x1117*x26 + x113*x287*x663 - x1167 + x1173 - x1177 + x139*x26*x72 + x1653*x27 + x287*x99
    x2063 = x4*x5
    x2064 = 2*x1538
    x2065 = x26*x27
    x2066 = x26*x71
    x2067 = x1539 + x2066*x730
    x2068 = -x1880*x26 + x55*x631
    x2069 = x1719 + x810
    x2070 = x319*x826
    x2071 = x2070*x47
    x2072 = x151*x2071
    x2073 = x1721*x326
    x2074 = x1639 + x2071*x840
    x2075 = x301*x642
    x2076 = x1632*x301
    x2077 = x2076 + x995
    x2078 = x423*x82
    x2079 = x102*x631
    x2080 = x151*x309 + x2079
    x2081 = x1618*x21
    x2082 = 3*x808 - 1
    x2083 = x161*x8
    x2084 = x1625*x26
    x2085 = x1600*x840
    x2086 = -x1565 + x2084 + x2085*x26 + x26*x392
    x2087 = x1691 + x2086
    x2088 = x66*x7
    x2089 = 16*x1569
    x2090 = x1568*x256
    x2091 = x330*x355
    x2092 = x179*x49
    x2093 = 19*x1568
    x2094 = x1978*x41
    x2095 = x330*x7
    x2096 = x15*x6
    x2097 = x2096*x688
    x2098 = x330*x62
    x2099 = x1580*x37
    x2100 = 12*x7
    x2101 = x1557*x33
    x2102 = 24*x364
    x2103 = 54*x119
    x2104 = x1568*x2103
    x2105 = x374*x448
    x2106 = x368*x882
    x2107 = x125*x1552
    x2108 = 2*x1568
    x2109 = 9*x15
    x2110 = x1089*x327
    x2111 = -x456
    x2112 = x16 + x2111
    x2113 = -x14*x1579 + x14*x2110 - x1452 - x1549*x315 - x1552*x538 - x1726*x2108 + x193 - x2082*x315 + x2095*x62 + x2109*x97 + x2112
    x2114 = x2089*x43
    x2115 = x1570*x256
    x2116 = x252*x7
    x2117 = 45*x97
    x2118 = x139*x42
    x2119 = x15*x218
    x2120 = x1530*x374
    x2121 = 12*x2120
    x2122 = x8*x882
    x2123 = x368*x7
    x2124 = x115*x1549
    x2125 = x1549*x326
    x2126 = -x1069 + x1104*x2102 + 9*x1212 + x1249*x61 + x139*x1715 + x139*x2104 - x139*x2105 + x139*x2116 + x14*x174*x2124 - x148 - x1574 - x1575 + x1596*x939 + x1600*x2083 - x1610 - x1613 - x1614 + x1699 + x2082*x903 + x2082*x905 - x2095*x652 + x2099*x2118 + x2107*x423 - x2114 - x2115 - x2117*x2118 + x2119*x2125 - x2119*x326 + x2121 - x2122*x2123 + x330*x929 - 26*x905
    x2127 = x1693*x289
    x2128 = -6*Y3*x13*x6 - 2*Y3*x24*x320*x4*x47*x6*x75 + x1602 + x1623 + x1624 + x1627 + x1628 + x1629 - x24*x4*x41*x6*x75 - x25*x317*x320*x4*x47 + x476 - x791
    x2129 = -x2079
    x2130 = x26*x497
    x2131 = x1635 + x2129 + x2130*x6 - x26*x841 + x355 - x4*x836
    x2132 = x1399*x14
    x2133 = x1406*x1987
    x2134 = x14*x27
    x2135 = x1046*x27 - 6*x13*x14*x27*x320*x47*x6 - 6*x13*x14*x27*x41 - 12*x14*x27*x29*x320*x37*x6 - 6*x14*x27*x29*x47 + x14*x27*x437 + x1775*x5 + x1982*x2134 + x279*x377*x8 - 2*x29*x320*x37*x5*x6*x8 - x29*x47*x5*x8 + x377*x63
    x2136 = x1988*x653
    x2137 = x262*x27
    x2138 = -18*x10*x118*x14*x27*x47*x7 - 6*x10*x14*x27*x33*x48*x7 - 22*x10*x14*x27*x37*x42*x7 - 15*x118*x47*x653*x7*x8 + x1407*x8 + x1731 + x1733 + x1735 + x1736 + x1781*x2134 + x2136*x8 + x2137*x467 - 6*x33*x48*x653*x7*x8 - 18*x37*x42*x653*x7*x8
    x2139 = x1674*x900
    x2140 = x1768 + x316 + x333
    x2141 = x1045*x2046 + x1752*x26 - x244*x901 + x245*x26
    x2142 = -x171*x2055
    x2143 = -4*Y3*x14*x24*x27*x29*x320*x37*x4*x5 + x1045*x519 + x1291*x14 + x14*x1676 + x1787*x26 + x1795 - x1799 + x200*x287 - x503
    x2144 = x1334*x81
    x2145 = x14*x26
    x2146 = x1830*x2145 + x1928
    x2147 = x14*x5
    x2148 = x2073*x826
    x2149 = -x1441*x8 - x187*x826 - x2072*x2134
    x2150 = x1065*x301
    x2151 = x2150 + x995
    x2152 = -x2082
    x2153 = x317*x326
    x2154 = x2070*x2153*x320
    x2155 = x1065*x1678 + x1631 + x285 - x812
    x2156 = x358*x81
    x2157 = x191*x26
    x2158 = x1549*x26
    x2159 = x14*x417
    x2160 = 16*x1962
    x2161 = x1706*x256
    x2162 = x1049*x2096
    x2163 = x1249*x683
    x2164 = x14*x1706
    x2165 = x1789*x374
    x2166 = x374*x550
    x2167 = x368*x933
    x2168 = x191*x289
    x2169 = m23*x5
    x2170 = x1650*x900
    x2171 = x1717 + x911
    x2172 = x1530*x401
    x2173 = x1298 - 4*x13*x14*x37*x7*x8 - 3*x14*x47*x48*x7*x8 + x1466 + x1467 + x1643 + x2172 + 9*x366 + x410
    x2174 = -x171*x2173
    x2175 = x402*x7
    x2176 = x1646*x1987
    x2177 = 16*x683
    x2178 = x2177*x374
    x2179 = x108*x932 - x2056 + x662*x934 - x727 + x937
    x2180 = x1199 + x1425
    x2181 = x529*x530
    x2182 = 2*x640
    x2183 = -x632
    x2184 = x2183 - x560*x999
    x2185 = -x2181 + x2182 + x2184
    x2186 = 14*x27
    x2187 = x2186*x377
    x2188 = x5*x7
    x2189 = x1018 + x1020 + x1022 - 10*x13*x14*x37*x5*x7 + x14*x1403 - 6*x14*x47*x48*x5*x7 + x1924*x27 - 15*x27*x41*x42*x7*x8 - 15*x27*x42*x6*x8 - 5*x27*x47*x48*x7*x8 + x461*x5
    x2190 = x1106*x8
    x2191 = x1071 + x1073 + x1078
    x2192 = x1531*x1985
    x2193 = 24*x10*x103*x14*x29*x320*x6*x8 + 6*x10*x13*x14*x320*x33*x6*x8 + 2*x10*x13*x14*x37*x8 + 6*x10*x14*x29*x33*x8 - x1133 - x1145 + x1147 - x1158 + x1160 - x1162 + x1163 - x1875 - x1938 - x2048*x2052 - x2049*x2051 - x2058 - x2173 - x2176 - x2192 + 16*x27*x320*x37*x48*x5*x6*x9 + 8*x27*x47*x48*x5*x9 + x718
    x2194 = -6*Y3*x13*x27 + x1125*x26
    x2195 = x1326*x26
    x2196 = -2*x2195
    x2197 = -x1948
    x2198 = x1185 + x1950 + x2197
    x2199 = x1406*x1985
    x2200 = x27*x298
    x2201 = x326*x933
    x2202 = x67*x8
    x2203 = x1188*x933
    x2204 = x330*x479
    x2205 = x10*x2204
    x2206 = x210*x417
    x2207 = x1188*x1994
    x2208 = x1188*x465
    x2209 = x1188*x26
    x2210 = x2209*x328
    x2211 = x1440*x26 + x185*x26
    x2212 = x112*x488
    x2213 = x108*x1188
    x2214 = x1188*x219
    x2215 = -x1031*x1188*x381 + x108*x1399 + x1106 - x1107 + x1109 - x1112 + x112*x2178 - 20*x1148*x1334 - x1155*x1188*x6 + x1189*x2019*x5 + x1262*x1993 + x1270 - x1282 + x1332 + x1352 - x1354 - x1356 - x1357 - x1359 + x1360 + x1361 + x1363 + x1364 - x1365 - x1366 + x1400 - x1401 - x1402 + x1405 - x1407 + x1408*x2137 - x1411 + x1412 - x1510 + x1784*x677 - x2007*x5 + x2009*x27 + x2016*x5 + x2017*x5 - x2041*x377 - x2133 - x2136 + x2188*x2213 + x2188*x2214 - x2199 - x2212 + x377*x674
    x2216 = x171*x9
    x2217 = x115*x1385
    x2218 = x26*x87
    x2219 = x212*x82
    x2220 = 18*x97
    x2221 = x323*x550
    x2222 = x1596*x66
    x2223 = x1576*x206
    x2224 = x1050*x27
    x2225 = 18*x2101
    x2226 = 12*x39
    x2227 = -x1108
    x2228 = x1032 + x2227
    x2229 = -x1442 - x150*x1549 - x150*x2082 - x154*x1552 - x1579*x27 + x185 + x2095*x674 - x2108*x58 + x2110*x27 + x2228 + x27*x622
    x2230 = x210*x42
    x2231 = x112*x55
    x2232 = x2041*x27
    x2233 = -x1041*x2095 + x1154*x330 + x1157*x1596 + x1215*x2082 - x1222 - x1527 + x1600*x762 + x1699 - x1705 - x1710 - x1712 + x1715*x210 + x1784*x2102 - x1966 - x1967 + x2082*x214 + x2099*x2230 + x210*x2104 - x210*x2105 + x210*x2116 + x2107*x212 - x2117*x2230 - x2123*x2232 + x2124*x27*x52 + x2125*x2231 - 26*x214 - x2160 - x2161 + x2163 + x2166*x933 - x2231*x326 + 9*x738
    x2234 = x27*x750
    x2235 = x1570*x27
    x2236 = x1091*x368
    x2237 = x289*x71
    x2238 = m13*x8
    x2239 = x1690 + x2086
    x2240 = x1579*x8
    x2241 = 4*x1568
    x2242 = x2241*x857
    x2243 = x237*x330
    x2244 = 10*x1569
    x2245 = 20*x1568
    x2246 = x1549*x863
    x2247 = 34*x7
    x2248 = 22*x327
    x2249 = 20*x1569
    x2250 = x1568*x219
    x2251 = x1586*x8
    x2252 = x14*x6
    x2253 = x1552*x847
    x2254 = -x1490 + x874
    x2255 = x1568*x555
    x2256 = x151*x1687
    x2257 = x2256*x9
    x2258 = x1722*x9
    x2259 = x1580*x596
    x2260 = x1682*x599
    x2261 = 8*x29*x319*x557
    x2262 = 6*x1685*x322
    x2263 = x2262*x592
    x2264 = x1687*x486
    x2265 = x1687*x840
    x2266 = x1685*x557
    x2267 = -x1245*x476 + x1601*x2266 + x1682*x603 + x2255*x349 - x2256*x7 + x2265
    x2268 = x558*x75
    x2269 = x1568*x557
    x2270 = 36*x596
    x2271 = x1682*x596*x6
    x2272 = 24*x1244*x182
    x2273 = 48*x319*x48*x557
    x2274 = x479*x555
    x2275 = x1242*x1682 - 15*x1568*x42*x555 + x1588*x1687 - x1682*x29*x556*x6 - 2*x1685*x557*x6*x75 + x1698 + x1722 + x2259 + x2263 + x2274 - 8*x29*x319*x557*x7 - 6*x29*x556*x6 - 2*x319*x556*x75
    x2276 = -x1091*x2273 - x114*x2271 + 72*x118*x1568*x556*x9 - x1240*x1682 - x126*x2270 - x1278*x2269 + 6*x13*x1682*x557*x6*x9 + 36*x13*x319*x558*x7*x9 + 18*x13*x557*x6*x9 + x1606 - x1685*x2272*x9 + 18*x1685*x29*x558*x6*x9 - x2255*x252*x9 - x2264 - x2266*x574 - x2268*x319*x367 - x2275 + 12*x29*x319*x557*x9 + 30*x319*x42*x556*x7*x9 + 45*x42*x555*x6*x9 - x44
    x2277 = x2031*x6
    x2278 = x560*x598
    x2279 = x2258*x560
    x2280 = x285*x560
    x2281 = x2257*x560
    x2282 = 4*x560*x599
    x2283 = x2282*x9
    x2284 = x1682*x627
    x2285 = x151*x560
    x2286 = x2266*x2285
    x2287 = x337*x560
    x2288 = x2261*x2287
    x2289 = x2265*x560
    x2290 = x1245*x2285
    x2291 = -3*Y3*x13*x24*x530*x555*x7 - Y3*x1682*x24*x322*x530*x556 - 2*Y3*x1685*x24*x317*x530*x557 + x2079 + x2256*x2287 - x2289 + x2290 + x391 + x650
    x2292 = x530*x820
    x2293 = x2129 + x2289 - x2290 - 3*x301*x303*x530 + x648
    x2294 = x1579*x5
    x2295 = x1172*x2241
    x2296 = x1549*x156
    x2297 = 20*x1962
    x2298 = x1027*x1552
    x2299 = x147 - x1511
    x2300 = x10*x2256
    x2301 = x10*x1722
    x2302 = x1687*x945
    x2303 = 72*x10*x118*x1568*x556 + 6*x10*x13*x1682*x557*x6 + 36*x10*x13*x319*x558*x7 + 18*x10*x13*x557*x6 - x10*x1685*x2272 + 18*x10*x1685*x29*x558*x6 + 12*x10*x29*x319*x557 + 30*x10*x319*x42*x556*x7 + 45*x10*x42*x555*x6 - x1144*x2271 - x1682*x1820 + x1701 - x1709*x2266 - x1866*x2268*x319 - x2255*x941 - x2269*x250 - x2270*x262 - x2273*x933 - x2275 - x2302 - x258
    x2304 = x2144*x6
    x2305 = x1902*x560
    x2306 = x2301*x560
    x2307 = x2300*x560
    x2308 = x10*x2282
    x2309 = x6**4
    x2310 = -36*Y3*x102 + x1568*x82 - x1983 + x355
    x2311 = x1473*x26
    x2312 = x1552*x26
    x2313 = -x1699
    x2314 = x5*x590
    x2315 = x2280*x565
    x2316 = x1252*x1682
    x2317 = Y3*x5
    x2318 = x151*x1682*x561
    x2319 = x2262*x558*x627
    x2320 = x5*x560
    x2321 = 8*x1618*x596
    x2322 = x2261*x337
    x2323 = x1722*x2320 + x1855 - x2256*x2320 - x2282*x5 + x564*x761
    x2324 = x590*x8
    x2325 = Y3*x8
    x2326 = x560*x8
    x2327 = x1722*x2326 - x2256*x2326 - x2282*x8 + x233*x564 + x336
    x2328 = x2309*x41
    x2329 = x2328*x90
    x2330 = 16*x119*x2309
    x2331 = x1682*x7
    x2332 = x1600*x7
    x2333 = x320**3
    x2334 = x2333*x33
    x2335 = x151*x2334
    x2336 = x2333*x322*x548
    x2337 = x1568*x330
    x2338 = x1568*x374
    x2339 = x1568*x172
    x2340 = x1588*x41
    x2341 = -x1549*x398 + x1583*x7 - x1601*x2334 - x1625 + x1693*x7 + x172*x2328 - x2085 - x2331*x70 - x2337*x349 + x2339 - x2340 + x482
    x2342 = 3*x171
    x2343 = x171*(x1093*x1549 + x144 - x1476 - x1549*x428*x7 + x1549*x472 + x1558 - x1571 + x1578*x330 + x1583 - x1588*x1600 + x1693 + x1695 - x2016 + x2089*x374 - x2107*x7 - x2125*x364 - x2204 - x2329 - x2330 + x2331*x402 + x2331*x49 + x2335*x6 + x2336*x6 - x393 + 16*x417 + x437)
    x2344 = -21*x102 + x107*x2333*x289*x317 - x1174*x476 + x1224*x1682*x289 + x1549*x1881 - x1552*x183*x289 + x1578 - x1579*x289 - x1583*x230*x289 + x1618*x478*x520 + x1626 - x1714*x341 - 2*x2084 + x2085*x286 + x2130 - x2153*x2312 + x2156 + x2183 - x2340*x26 + x26*x355*x382 + x286*x392 + x289*x622 - x573*(x1549*x909 + x1568*x554 - x1584*x26 - x1586*x26 + x1682*x26*x624 - x2045*x2339 + x2334*x26*x840 + x331*x391 - 10*x358 + x401 + x913) + x975
    x2345 = -x1249 + x1588*x564 - x1678*x530*x784 + x1682*x2182 + x1683*x1686*x560 - x1688*x560 + x2156 + x2184 + x530*x985
    x2346 = -x2156 + x224*x308 + x632
    x2347 = -x2181*(-x2150 - x646) + x2346 + x530*(x1549*x998 + x1689 + x2346 - x817*(x1679*x308 - x1680 + x982 + x995))
    g11 = x1003*(m11*(x151 + x530*(x10*x590*x626 - x101*x630 - x101*x633 + x101*x634 + x101*x638 - x174*(x14*x273 + x171*(-x108*x545 - x109*x549 + 6*x118*x28*x47*x542*x6 + 5*x118*x47*x537*x6 - x128*x545 + 14*x13*x14*x37*x6*x9 + 12*x13*x41*x6*x8 + 12*x14*x29*x33*x6*x9 + 30*x14*x41*x42*x6*x9 + 23*x14*x47*x48*x6*x9 - 20*x175 - x179*x540 - x179*x541 + 8*x28*x33*x48*x542*x6 + 10*x28*x37*x42*x542*x6 + 12*x29*x47*x6*x8 + 6*x33*x48*x537*x6 - x335 + 8*x37*x42*x537*x6 + 8*x37*x6*x75*x8 - x534*x97 - x534 - x536*x97 - x536 - x538 - x539 - x544 - x545*x551 - x547 - x552) + x532 + x533) - x531 - x566*x628 + x573*(60*Y3*x42*x9 + 2*x101*x24*x29*x530*x558 + 5*x101*x24*x48*x530*x556 - x101*x554 - x101*x562 + 6*x13*x24*x530*x555*x9 + 4*x24*x530*x557*x75*x9 - x563*x564 - x568 - x572) + x591*x606 - x591*(-x277*x6*x91 - x363*x6 - x575 - 5*x576 + 4*x577 + x578*x6 + x580 + x585 + x586 + x589) + x591*(5*x14*x28*x41*x42*x6 + 5*x14*x28*x42 + 4*x14*x28*x47*x48*x6 + 4*x29*x47*x6*x9 - x357*x6 + 4*x37*x6*x75*x9 - x577 - x584 - x586 - x610 - x613) + x635*x636 + x639*x9 + x641) + x579 + x606*x649 - x648*(-x101*x642 + 15*x312 + x644 + x646)) - m12*(2*x170*x190*x4 - x242 - x304*x314*x5 + x4*(X3*(x23*x5 - x26*x27*x36 - x26*x38*x40 - x26*x41*x46 - x26*x5*x51 + x65 + x80 + x89) + 2*Y3*x13*x24*x27*x28*x37*x4 + 15*Y3*x14*x24*x4*x41*x42*x5*x9 + 8*Y3*x14*x24*x4*x47*x48*x5*x9 + 6*Y3*x24*x27*x28*x29*x33*x4 + x170*x272*x4*x5 - x171*x190 - x174*(x171*(-x100 - x101*x106 + x104*x122 - x110*x27 + x110*x5 - x111*x113*x42 + x117 + x120*x121 + x121*x124 + x125*x127 - x128*x130 - x132*x134*x5 + x132*x142 + x135*x136 + x136*x138 + x141*x5 + x145*x146 + x149 + x160 + x168 - x45*x97 - x45 - x93*x97 - x93 - 15*x96) + x173*x5 + x55) - x18 - x269*x5 - x284*(x147 + x160 + x27*x278 - x274*x97 - x274 + x276 + x283 - 4*x96) - x288 - x290 - x291 - x294 - x295 - x296 - x297 - x299)) + m13*x530*x8*(x817*(-x981 - x983) + x989 + x993) - m13*(x161 - x314*x529 + x4*(X3*(9*x14*x25*x4*x47*x48*x6*x9 + 6*x25*x28*x320*x33*x4*x75 + 5*x25*x29*x4*x47*x6*x8 - x26*x321 - x26*x329 - x316 - x325*x76 - x334 - x335 - x347) - x10*x469 + x174*x286*x390 + x174*(x102 + x139*x426 - x171*(-x101*x359 + x109*x376 + x111*x375 - x120*x360 - x129*x381 + x132*x378 + x348 + x352 + x353 - 4*x354 - x356 + x357 - x361 - x362*x382 - x362*x41 - 4*x363 + 10*x365 + 15*x366 - x367*x369 - x370*x98 + x371*x372 + x371*x379 + x380*x92 + x386 + x400 + x407 + x425 + x6*x92)) + x175*x293 - x19*x506 + x205*x507 - x28*x501 + x286*x455*x9 - x286*x493 - x286*x496 + x286*x498 + 2*x286*x499 + x324*x504 - x492 - x495 - 5*x503 + x510 + x528) + 2*x518) + m23*x1002*x5*x530 - x798*(-x269*x8 - x5*(x149 + x691) - x650 - x651 - x797) - x844*(x341*x832 - x611*x826 + x817*(-x139*x802 - x801 + x805 + x807 - x816) + x819 - x821 - x824 - x825*x826 + x828 - x831 + x835 + x843) - x895*(-x239 - x8*x845 - x893) - x978*(X3*x916 + 3*Y3*x13*x14*x24*x320*x4*x47*x8 + 4*Y3*x13*x24*x37*x4*x6*x9 + 4*Y3*x14*x24*x29*x320*x37*x4*x8 + 3*Y3*x24*x4*x47*x48*x6*x9 + 3*x13*x14*x24*x4*x41*x8 + 2*x14*x24*x29*x4*x47*x8 + 2*x170*x926 - x409 - x469*x8 - x786 - x927 - x955 - x957 - x958 - x959 - x960 - x961 - x962 - x963 - x974 - x976))
    g12 = x1003*(-m11*(-x1004 + 2*x1040*x170*x4 - x1066*x1068 + x4*(X3*(x1005*x28 - x1007*x26 - x1009*x26 - x1010*x26 + x1015 + x1023 - x26*x344*x5 + x65) + x1004 + x1007*x289 + x1009*x289 + x1010*x289 - x1040*x171 - x1053*x5 - x1060 - x1061 - x1063 + x1064 + x15*x287*x5*x61 + x174*(-x1024 - x1035 - x171*(-x100 + 5*x101*x118*x47*x5*x6 + 6*x101*x33*x48*x5*x6 + 8*x101*x37*x42*x5*x6 - x1025 - x1026*x97 - x1026 + x1027 - x1028 - x1029*x1030 - x1029*x128 - x1031*x132*x397 - x1034 - x108*x130 + 6*x118*x14*x27*x28*x47*x6 + 2*x13*x14*x37*x5*x6*x8 + 6*x13*x27*x37*x6*x9 + 8*x14*x27*x28*x33*x48*x6 + 10*x14*x27*x28*x37*x42*x6 + 6*x14*x29*x33*x5*x6*x8 + x156 - x164 - x167 - x179*x5*x549 - x185 + 30*x27*x41*x42*x6*x9 + 20*x27*x47*x48*x6*x9 - 6*x96)) + x284*(-x1027 - x1035*x97 - x1035 - x1054 - x1059 - x156 - x283 + 2*x29*x33*x5*x6*x9 + x47*x48*x5*x6*x9) - x290 - x294 - x296 - x297 - x5*x878)) + m12*(-x1186 - x1236*x1261 + x530*(-X3*(-x1187 - x1190*x26 - x1192*x26 + x1194 + x1195 + x1198 + x1200 + x1208 + x26*x485 + x694 + x706 + x708) + 3*x10*x170*x530*(-x10*x1238 + 4*x10*x13*x557*x6 + 5*x10*x42*x555*x6 - x1237 - x1240 - x1246 - x126*x637 + 12*x13*x557*x6*x9 - x262*x597 + 15*x42*x555*x6*x9 - x44) - x114*(x1227 + x13 + x171*(-x105*x126*x55 - x108*x1221 - x1188*x1211 + x1209 - x1210*x97 - x1210 - 5*x1212 - x1213 - x1214 + x1215 + x1216*x135 + x1216*x138 + x1217 + x1218*x1219 + x1220 - x1221*x128 + x1223 + x1226 + x212*x35 - x212*x43*x550 - x273*x41*x6 - x278)) - x1236*x590 - x1255 + x590*x772 - x758) - x648*(x1256 + x1258 + x1259) - x945) - m13*(2*x1128 - x1183*x1185 + x4*(X3*(-x1025 - x1070*x26 - x1076 - x1079 - x1085 + 9*x25*x27*x4*x47*x48*x6*x9 + 6*x25*x320*x33*x4*x5*x75*x9 - x26*x689) + 4*Y3*x13*x24*x37*x4*x5*x6*x9 + 4*Y3*x24*x27*x29*x320*x37*x4*x9 - x1111 - x1117*x286 - x1118*x286 - x1128 - x1129 - x1165*x5 - x1166 - x1167 - x1168 + x1169 + x1170 + x1171 + x1173 + x1176 - x1177 - x1179 - x1180*x501 - x1181*x275 - x1182 + 3*x13*x24*x27*x4*x41*x9 + 2*x24*x27*x29*x4*x47*x9 + x24*x322*x4*x47*x5 + 3*x9*(x1116 - x171*(-x1035*x382 - x1035*x41 - x108*x1092 - x1086 - x1087 + x1088 + x1089*x55 - x1090*x43*x5 - x1092*x120 - x1094 + x1095*x176 + x1096*x43 + x1097*x379 + x1098*x1099 - x1100*x112*x61 + 2*x1101*x374 + x1102*x376 + x1105 + x1115 + x126*x27*x90 + x277*x5*x9 - x472*x5 - x87 + x95))) + x677) + m23*x1450*x530*x8 - x1333*(x1184 - x1318 + x1319*x1329 - x1321 + x1323*(-x1322 - x309*x979 - x980) - x1325 + x1328 - x1330*x826 + x1331*x826 + x1332*x832 - x71*x730*x826) - x1388*(-x1387 - x147 - x5*(x1223 + x1349)) - x8*x844*(x1067 + x1320 - x1433 + x1436*x27 - x1438 - x1440*x826 + x1441 + x1442*x826 - x185*x826 - x678*x826) - x8*x977*(X3*x1398 + x1134*x286 + x1138*x286 - x1165 + x1260*x1415 - x1417 - x1418 - x1419 - x1421 - x1422 + x1424*x210 + x1426 + x1432 + x199*x293 + x5*(x1106 - x1414) - x792) - x894*(-x1053*x8 - x1289 - x1317 + x5*(-x1286 - x1288)))
    g13 = x1003*(-m11*(-x1066*x1504 + 2*x1483 + x233 + x4*(X3*(6*x13*x14*x25*x4*x41*x6 + 2*x14*x25*x29*x320*x37*x4*x9 + 6*x14*x25*x29*x4*x47*x6 + 6*x14*x25*x320*x33*x4*x75*x9 - x1451 - x1453 - x1454*x28 - x1455*x26 - x1456*x1457 - x1458*x165 - x1460 - x180*x26 + 15*x25*x28*x4*x41*x42*x6 + 8*x25*x28*x4*x47*x48*x6 - x28*x338) + Y3*x1044 - x10*x1493 + x1452*x289 + x1456*x289*x323 - x1477*x26 - x1478*x26 + x1479*x26 - x1483 + x1484 - x1486*x502 - x1494 - x1495 + x1496*x28 - x1497 + x1498*x293 + x1501 + x174*(-x102 - x171*(24*x101*x118*x47*x7 + 35*x101*x20*x41*x7 + 35*x101*x20*x6 + 10*x101*x37*x42*x7 + 8*x103*x14*x28*x29*x320*x6 - x109*x381 + 6*x13*x320*x47*x6*x9 + 6*x13*x41*x9 - x132*x1465 - x135*x371 + 2*x14*x28*x29*x33 + 2*x14*x28*x320*x37*x48*x6 + x14*x28*x47*x48 - x1461 - x1462 - x1464*x91 - x1468 - x1470 - x1471 + 10*x29*x320*x37*x6*x9 + 5*x29*x47*x9 - 4*x353 - 20*x366 - x382*x563 - x407 - x487 - x578) + 5*x42*x6*x9) + x180*x289 - x205*x287*x327 - x233 + x26*x499 - 8*x28*x49*x502 - x289*x869 + x293*x340 + x492 - 6*x509)) - m12*(-x1183*x1504*x5 + 2*x1524 + x4*(X3*(-x1054*x26 - x1080*x5 - x147*x346 - x1505 - x1506*x26 - x1507*x26 - x1509 + 2*x25*x27*x29*x320*x37*x4*x9 + 2*x25*x27*x29*x4*x47*x6 + 6*x25*x27*x320*x33*x4*x75*x9 + 15*x25*x4*x41*x42*x5*x6*x9 + 8*x25*x4*x47*x48*x5*x6*x9) + x1129 + x114*(-x171*(8*x103*x27*x29*x320*x6*x9 - x104*x1095 - x1097*x135 - x1100*x1101 - x1105 - x1113*x397 - x1148*x1218 + 24*x118*x47*x5*x7*x9 + 6*x13*x27*x37*x7 - x1354 - x1510 - x1513 + 35*x20*x41*x5*x7*x9 + 35*x20*x5*x6*x9 + 2*x27*x29*x33*x9 + 2*x27*x320*x37*x48*x6*x9 + 4*x27*x47*x48*x7 + x27*x47*x48*x9 - x274*x382 - x274*x41 + 10*x37*x42*x5*x7*x9 - x71 - 4*x95) + x426*x5) + x1196*x5 + x147*x522 + x1507*x289 + x1515*x26 + x1516*x26 - x1517*x26 - x1519 - x1524 - x1537*x5 - x1538 - x1539 - x1540 - x1541*x45 - x1542*x95 - x1543 + x1544*x5 + x1547 - x27*x959 + x27*x969 + x276*x293) + x761) - m13*(2*x1605 - x1635*(x1259 + x1633 + x1634*x9) + x1636 + x4*(X3*(210*Y3*x20*x7*x9 + 6*x13*x25*x320*x4*x47*x6*x9 - x1301 - x1461 - x1551 - x1554 - x1556 - x1560 - x1561*x26 - x1562 - x1566 + 8*x25*x29*x320*x37*x4*x6*x9) - x10*x1615 + x114*(-x1593 - x171*(-x1069 - x1091*x90 - x1209 - x1212*x1549 - x1218*x1569 - x128*x1570 + 12*x13*x320*x33*x7*x9 + 6*x13*x37*x6*x9 - x1549*x278 - x1552*x1573 - x1567*x9 - x1572*x41 - x1574 - x1575 - x1577*x548 - x1592 + 16*x320*x37*x48*x7*x9 + 10*x320*x42*x47*x7*x9 - x368*x595 + 15*x41*x42*x6*x9 + 12*x47*x48*x6*x9)) + x1316 + x1518*x286*x323 + x1548 + x1550*x289 + x1553*x289 + x1555*x289 + x1559*x289 - x1605 - x1616 + x1617 + x1619*x1620 - x1622*x9 + x1630 + x26*x609 - x286*x609 - x286*x827 + x289*x387 - x332*x9 - x370*x502*x61 + x486 + x523*x9)) + m23*x1723*x5*x530*x8 + m33*x1692*x530*x8 - x1333*(-x1309 - x1329*x813 - x1439*x832 - x1502*x990 + x1548 + x1595*x826 + x1638*x587 + x1640 - x309*x350 - x575*x826 + x817*(x1091*x803 + x1637 - x800*x9 + x813*x979)) - x1388*(x1660 + x1677 + x5*(x145 - x1659)) - x1718*x978 - x895*(-x1493*x8 + x1654 + x386 + x967 + x972))
    g21 = x1003*(m12*(-x1186 - x1261*x1819 - x486 + x530*(-X3*(x1200 + x1290 + x1293 + x1296 - x1806*x26 - x1807*x26 + x1808 + x1812 + x26*x944 - x696 + x700 + x703) - x1144*(x13 + x171*(-x108*x1647 - x116 - x1211*x542 + x1226 - x1237*x41*x6 - x128*x1647 + x1334*x134*x542 - x1334*x423*x550 + x135*x887 + x138*x887 + x141 - x1783*x549 + x1813 - x1814*x97 - x1814 - x1815 - x1816 + x1817 + x35*x423 - x543 + x615 + x903) + x173) - x1255 - x1289 + x1311*x590 + 3*x170*x530*x9*(12*x10*x13*x557*x6 + 15*x10*x42*x555*x6 - x1238*x9 - x1246 - x126*x597 + 4*x13*x557*x6*x9 - x1820 - x258 - x262*x637 - x273 + 5*x42*x555*x6*x9) - x1819*x590) - x648*(x1256 + x1821 + x644)) + m13*x1002*x5*x530 - m22*(2*x170*x1750*x4 - x1764*x1765 - x242 + x4*(X3*(x1015 - x1364*x26*x8 + x1724*x22 - x1725*x26 - x1728*x26 - x1729*x26 + x1737 + x80) + x1064 - x1378*x8 - x171*x1750 + x1725*x289 + x1728*x289 + x1729*x289 + x1755*(2*x10*x29*x33*x6*x8 + x10*x47*x48*x6*x8 - x1741 - x1747*x97 - x1747 - x1751 - x1754 - x271 - x863) - x1756 - x1757 - x1758 - x1759 + x1760*x39*x8 + x242 - x288 - x291 - x295 + x52*(-x171*(6*x10*x13*x14*x37*x6 + 30*x10*x14*x41*x42*x6 + 20*x10*x14*x47*x48*x6 - x1030*x1744 - x108*x1746 - x112*x1745*x397 + 5*x118*x1339*x47*x6*x8 + 6*x118*x14*x27*x47*x6*x653 - x128*x1744 + 2*x13*x27*x37*x5*x6*x8 + 6*x1339*x33*x48*x6*x8 + 8*x1339*x37*x42*x6*x8 - x1343*x548*x8 + 8*x14*x27*x33*x48*x6*x653 + 10*x14*x27*x37*x42*x6*x653 - x1738 - x1740*x97 - x1740 + x1741 - x1742 - x1743 - x193 - 6*x197 - x243 - x245 + 6*x27*x29*x33*x5*x6*x8 - x552 + x863) - x1747 - x532) - x691*x8)) - m23*(x161 + 2*x1792 - x1803*x1805 + x4*(X3*(9*x10*x14*x25*x4*x47*x48*x6 + 6*x10*x25*x320*x33*x4*x75*x8 - x1051*x26 - x1738 - x1766*x26 - x1771 - x1773 - x334) + 4*Y3*x10*x13*x24*x37*x4*x6*x8 + 4*Y3*x10*x14*x24*x29*x320*x37*x4 + 3*x10*x13*x14*x24*x4*x41 + 2*x10*x14*x24*x29*x4*x47 + 3*x10*(x14*x426 - x171*(x10*x1098*x14 + x10*x277*x8 - x108*x1777 + x1089*x434 - x1090*x1776 - x120*x1777 - x14*x1781 + x14*x262*x90 - x1734 - x1747*x382 - x1747*x41 - x1774 + x1775 - x1778 + x1779*x372 + x1779*x379 + x1780*x378 + x1782*x1783 + x1783*x376 + x1786 + x196 - x226 + x462 - x472*x8)) - x1181*x201 - x1421*x8 - x1787*x286 - x1788*x286 - x1792 - x1793 + x1794 + x1795 + x1797 - x1799 - x1800 - x1801 + x24*x322*x4*x47*x8 - x247 - x495 - x503 + x509 - x525 + x526 - x8*x955)) - x1833*(-x8*(x1817 + x845) - x874 - x893) - x1836*(X3*x916 + x122*x293 + x1260*x926 + x139*x1424 + x1426 + x1835 + x286*x411 + x286*x413 - x786 + x8*(x454 - x469) - x955 - x957 - x958 - x960 - x962 - x967) - x5*x844*(x14*x1436 - x144*x823 + x1452*x826 + x1823 - x1837 - x1838*x826 + x1840*x826 - x193*x826 + x818 - x826*x869) - x894*(-x5*x691 - x758 - x797 + x8*(-x267 - x269)) - x977*(x10*x1485*x826 - x14*x1830*x826 + x1804 - x1822 - x1824 + x1825*(-x1322 - x1443*x309 - x1444) - x1826 + x1828 - x1829*x826 + x1831*x848 + x258*x823))
    g22 = x1003*(-m12*(-x1004 + 2*x170*x1849*x4 - x1851*x304*x8 + x4*(X3*(x1023 - x104*x196*x26 - x1266*x14*x26 - x1274*x26*x829 + x1351*x8 + x1737 - x1841*x26 + x89) + 15*Y3*x10*x24*x27*x4*x41*x42*x8 + 8*Y3*x10*x24*x27*x4*x47*x48*x8 + 2*Y3*x13*x14*x24*x37*x4*x653 + 6*Y3*x14*x24*x29*x33*x4*x653 - x1037 - x1060 - x1061 - x1063 - x1288*x8 + x1382*x170*x4*x8 - x171*x1849 - x1755*(x14*x1816 + x1754 + x1848 - x1850*x97 - x1850 - 4*x197 + x202 + x874) - x1756 - x1757 - x1758 - x1759 - x299 - x52*(x1227*x8 + x171*(x1047*x822 - x108*x1744 + x108*x1845 + x120*x1845 + x1214*x14 + x1217*x8 + x1225*x15 + x124*x1845 + x1262*x14*x142 - x128*x1746 - x1340*x549 + x1342*x138*x14 + x1342*x1846 + x14*x879 - x142*x1745 - x1743 - x1744*x397*x42 - x1842 - x1844*x97 - x1844 + x1847 + x1848 - 15*x197 + x246 - x736*x829) + x434))) + m13*x1450*x530*x8 + m22*(x151 + x1898 + x1903*x649 + x530*(x10*x639 - x1339*x630 - x1339*x633 + x1339*x634 + x1339*x638 + x1348*x590*x9 + x1420*x636 - x1448*x628 - x1888 + x1903*x591 - x52*(x1024 + x1237*x27 + x171*(14*x10*x13*x27*x37*x6 + 12*x10*x27*x29*x33*x6 + 30*x10*x27*x41*x42*x6 + 23*x10*x27*x47*x48*x6 - x1034 - x106*x1339 - x108*x1892 + 6*x118*x1188*x47*x6*x653 + 5*x118*x1891*x47*x6 + 8*x1188*x33*x48*x6*x653 + 10*x1188*x37*x42*x6*x653 - x128*x1892 + 12*x13*x41*x5*x6 - 20*x1367 - x1370 - x1372 - x1373 - x154 - x1854 - x1889*x97 - x1889 - x1890*x97 - x1890 + 6*x1891*x33*x48*x6 + 8*x1891*x37*x42*x6 - x1892*x551 + 12*x29*x47*x5*x6 + 8*x37*x5*x6*x75 - x540*x671 - x541*x671) + x279) + x573*(60*Y3*x10*x42 + 6*x10*x13*x24*x530*x555 + 4*x10*x24*x530*x557*x75 + 2*x1339*x24*x29*x530*x558 + 5*x1339*x24*x48*x530*x556 - x1339*x554 - x1339*x562 - x1893*x564 - x1894 - x572) - x591*(x1305 - x1341*x277*x6 - x1865*x6 - x1895 + 4*x1896 + x1897*x6 + x1899 + x1900 - 5*x734 + x745) + x591*(4*x10*x29*x47*x6 + 4*x10*x37*x6*x75 - x1307 - x1862*x6 - x1896 - x1900 + 5*x27*x41*x42*x6*x653 + 5*x27*x42*x653 + 4*x27*x47*x48*x6*x653 - x584 - x748) + x641) - x648*(x10*x1904 + x1258 - x1339*x642 + x646)) + m23*x5*x530*(x1449 + x817*(-x1445 - x983) + x989) - m23*(-x1851*x529 + 2*x1884 + x4*(X3*(9*x10*x25*x27*x4*x47*x48*x6 - x1071 - x1079 - x1368*x26 - x1852*x5 - x1853*x26 - x1854 - x1859 + 5*x25*x29*x4*x47*x5*x6 + 6*x25*x320*x33*x4*x653*x75) - x1166 - 5*x1167 - x1181*x195*x27 + x1367*x293 - x1414*x9 + x1673*x27 - x1877 - x1878*x286 - x1879*x286 + x1880*x286 + x1881*x5 + x1882 + x1887 + x27*x286*x716 + x27*x286*x719 + x286*x475*x5 - x501*x653 + x52*(x102 + x1227*x6 - x171*(x1096*x1262 - x1116*x330*x653 - x120*x1863 - x1225*x327 - x1339*x359 + x1340*x1782 + x1340*x376 - x1341*x172*x41 + 15*x1525 + x1665 + x1666 + x1668 + x1843*x380 + x1843*x6 + x1860 - x1861 + x1862 - x1864 - 4*x1865 - x1866*x369 + x1867*x372 + x1867*x379 - 8*x1869 + x1873 + x1875 + 10*x364*x683 - 4*x718))) + x677) - x1333*x8*(X3*x1398 + 4*Y3*x10*x13*x24*x37*x4*x6 + 3*Y3*x10*x24*x4*x47*x48*x6 + 3*Y3*x13*x24*x27*x320*x4*x47*x5 + 4*Y3*x24*x27*x29*x320*x37*x4*x5 - x1165 + 3*x13*x24*x27*x4*x41*x5 - x1414*x5 + 2*x1415*x170 - x1418 - x1419 - x1421 - x1422 - x1427 - x1429 - x1430 - x1431 - x1660 - x1874 + 2*x24*x27*x29*x4*x47*x5 - x792 - x976) - x1832*(-x1233 - x1288*x5 - x1317 - x8*(x1053 + x1847)) - x1916*(-x1275 - x1349*x5 - x1387) - x844*(-x1306*x826 + x1831*x341 + x1908 - x1909 - x1910 - x1911*x826 + x1912 - x1914 + x1915 + x817*(-x1905 + x1906 + x1907 - x210*x802 - x816) + x843))
    g23 = x1003*(-m12*(-x1504*x1803*x8 + 2*x1926 + x233 + x4*(X3*(2*x10*x14*x25*x29*x320*x37*x4 + 6*x10*x14*x25*x320*x33*x4*x75 + 15*x10*x25*x4*x41*x42*x6*x8 + 8*x10*x25*x4*x47*x48*x6*x8 + 2*x14*x25*x29*x4*x47*x6 - x1460 - x1661*x8 - x1662*x8 - x1751*x26 - x1917 - x1918*x26 - x26*x780) - x1062*x1428 + x1144*(-x171*(8*x10*x103*x14*x29*x320*x6 + 24*x10*x118*x47*x7*x8 + 2*x10*x14*x29*x33 + 2*x10*x14*x320*x37*x48*x6 + x10*x14*x47*x48 + 35*x10*x20*x41*x7*x8 + 35*x10*x20*x6*x8 + 10*x10*x37*x42*x7*x8 - x1093*x14 + 6*x13*x14*x37*x7 - x138*x1779 + 4*x14*x47*x48*x7 - x1465*x1780 - x1492 - x1781*x8 - x1786 - x1846*x933 - x1850*x382 - x1850*x41 - x191 - x1919 - 4*x196 - x850) + x426*x8) + x14*x969 + x1501 - x1541*x1842 - x1542*x196 - x1649*x8 + x1672*x8 + x1793 + x1798*x1931 + x1921*x26 + x1922*x26 - x1923*x26 - x1926 - x1927 - x1928 - x1929 - x1930 + x202*x293 + x289*x780 - x508 + x714*x8)) + m13*x1723*x5*x530*x8 - m22*(-x1504*x1764 + 2*x1947 + x4*(X3*(2*x10*x25*x27*x29*x320*x37*x4 + 6*x10*x25*x27*x320*x33*x4*x75 + 6*x13*x25*x27*x4*x41*x6 - x1454*x653 - x1509 - x1852*x27 - x1932 - x1933 - x1934*x26 - x1935*x1936 + 6*x25*x27*x29*x4*x47*x6 + 15*x25*x4*x41*x42*x6*x653 + 8*x25*x4*x47*x48*x6*x653 - x26*x684 - x338*x653) - 6*x1169 - x1429*x27 + x1442*x289 + x1496*x653 + x1547 - x1659*x9 - x1727*x505 + x1857*x293 + x1877 + x1881*x27 + x1935*x293 - x1941*x26 - x1942*x26 + x1943*x26 + x1944*x26 - x1947 + x1948 - x1949 - x1950 - x1951 - x289*x678 + x289*x684 - x502*x681 + x52*(5*x10*x42*x6 - x102 - x171*(6*x10*x13*x320*x47*x6 + 6*x10*x13*x41 + 10*x10*x29*x320*x37*x6 + 5*x10*x29*x47 + 8*x103*x27*x29*x320*x6*x653 - 10*x1148*x1262 + 24*x118*x1339*x47*x7 + 35*x1339*x20*x41*x7 + 35*x1339*x20*x6 + 10*x1339*x37*x42*x7 - x1340*x381 - x1341*x1464 - x135*x1867 - x1470 - 20*x1525 - x1664 - 4*x1860 - x1873 - x1893*x382 - x1897 - x1937 - x1938 - x204 + 2*x27*x29*x33*x653 + 2*x27*x320*x37*x48*x6*x653 + x27*x47*x48*x653 - x946)) + x653*x67 - x761) + x761) - m23*(-x1635*(x10*x1634 + x1633 + x1821) + x1636 + 2*x1970 + x4*(X3*(210*Y3*x10*x20*x7 + 6*x10*x13*x25*x320*x4*x47*x6 + 8*x10*x25*x29*x320*x37*x4*x6 - x1526*x26 - x1566 - x1954 - x1956 - x1958 - x1960 - x1961 - x204 - x722) - x10*x1622 + x10*x286*x908 - x10*x332 + x10*x523 + x1144*(-x1593 - x171*(12*x10*x13*x320*x33*x7 + 6*x10*x13*x37*x6 - x10*x1567 + 16*x10*x320*x37*x48*x7 + 10*x10*x320*x42*x47*x7 + 15*x10*x41*x42*x6 + 12*x10*x47*x48*x6 - 2*x102*x1964 - x128*x1706 - x1447*x368 - x1527 - x1549*x1816 - x1549*x738 - x1592 - x1711*x548 - x1813 - 10*x1962 - x1963*x41 - x1966 - x1967 - x90*x933)) + x1619*x1671 + x1630 - x1713*x9 + x1952 + x1953*x289 + x1955*x289 + x1957*x289 + x1959*x289 - x1970 - x1971 + x1972 - x1973*x502 + x26*x747 - x286*x735 - x286*x747 + x289*x950 + x793 + x945)) + m33*x1692*x5*x530 - x1718*x1836 - x1833*(x1654 + x8*(-x1493 + x822) + x974) - x1916*(x1417 - x1659*x5 + x1666 + x1677 + x972) - x977*(-x1437*x258 - x1439*x1831 - x1446*x1502 + x1638*x743 + x1640 - x1895*x826 + x1952 + x1968*x826 - x309*x715 - x755 + x817*(-x10*x800 + x1443*x813 + x1637 + x803*x933)))
    g31 = x1003*(-m11*(x14*x2031 - x1458*x847 - x1485*x26*x9 + x1494 - 4*x1499 - x19*x4*x956 + x1974 - 4*x1975 + x2028*x434 - x2029*x2030 + x2032*x856 + x2034 + x4*(X3*(x1393*x19 - x1498*x2001 + x175*x339 - 4*x1767 - x1798*x2002*x326 + x2000 + x2004*x8 + x2005 + x26*x544 + x333 + x347) + 5*Y3*x14*x24*x4*x47*x48*x6*x9 + 4*Y3*x24*x29*x320*x37*x4*x542*x8 + 4*Y3*x24*x29*x4*x47*x6*x8 + 3*x13*x14*x25*x4*x41*x9 + 2*x14*x25*x37*x4*x75*x9 - x1423*x324 - x1497 - x171*(x14*x918 + x1482 + x15*x2006 - x28*x418 - x402*x431 - 5*x511 + x513) - x175*x287 - x1839*x2002 - x19*x67 - x1929 - x1976 - x2020*x2021 - x2023*x8 - x2024*x8 - x2025 - x2026 - x2027 - x26*x493 - x508 - x528 - x8*(x171*(-x101*x1979 + x101*x1984 - x101*x1988 + x108*x1989 - x109*x446 + x129*x1408 - x133*x1650 - x139*x1996 + x14*x1486 + x14*x1487 + x15*x1993*x8 - x1588*x546 + x1594 + x1607*x546*x6 - x1715*x423 - x1977*x380 - x1978 + x1980*x542 - x1981*x380 - x1981*x6 - x1982*x542 - x1983*x61 - x1985*x371 - x1986*x534 - x1987*x371 + x1989*x219 + x1990*x542 + x1991 + 17*x1992 + x1995*x43 - x1997*x9 - x1998*x542 + x1999*x91 + x256*x360 + x35*x91 - 3*x353 + 8*x354 + x361 + 8*x363 - 33*x366 - x380*x619 + x403 + x406 + x408 - 4*x410 + x480*x542 + x484 - x486*x546 - x620 - x856*x94 + 16*x919 + x923) + x921))) + m12*x5*(x2031 + x2185 + x486*x564 + x530*x990 - x530*(-X3*(x1573*x26 - x2001*x905 - x2002*x328 + x2004 + x2170 + x2171 + x26*x543 + x896 + x897 - x899 + x902 - x904 - x907) + x1178 - 5*x139*x505 + x1651 + x171*(-x10*x1997 + x1295 + x1334*x1995 - x1473*x542 + x1648 - x1781*x542 + x1785*x8 - x1806 - x1807 + x1809 + 5*x1992 - x2011*x2051 + x2014*x933 + x2018*x933 - x2053 - x2172 - x2175*x542 - x2176 + x2178*x423 + x2179 + x460*x542 + x702 + x924 + x954) + x1812 + x1835 + x2020*x491 + x2023 + x2024 + x2174 + x2180 - x507*x546 + x921) + x561*x595 - x568) - m12*(x1350*x139 - x2063*x529 - x2063*x957 + x2064 - x2065*x356 + x2067 + x2068 - x242*x26*x829 + x4*(X3*(x1076 + x1099*x1393 - x1263*x2001 - x139*x145*x2045 - x1508 + x2044 + x2047 + x332*x5 + x5*x896 + x5*x902 + x5*x911) + 3*Y3*x13*x24*x4*x41*x5*x6 + 15*Y3*x14*x24*x4*x41*x42*x5*x6*x8 + 5*Y3*x14*x24*x4*x47*x48*x5*x6*x8 + x1179 + 3*x13*x14*x25*x4*x41*x5*x8 - x1386 - x139*x2060 - x1543 - x1546 + x170*x4*x5*x926 - x171*(-x1119*x95 + x1124 + x1523 + x2006*x39 + x27*x918 - x280*x7) - x1834*x5 - x1876*x2059 - x1882 - x2061 - x2062 + 2*x25*x27*x37*x4*x75*x9 + x25*x4*x41*x5*x75 - x8*(x171*(24*x103*x27*x28*x29*x320*x6 + 6*x13*x27*x28*x320*x33*x6 + 2*x13*x27*x28*x37 + 16*x14*x320*x37*x48*x5*x6*x9 + 15*x14*x320*x42*x47*x5*x6*x9 + 15*x14*x41*x42*x5*x9 + 8*x14*x47*x48*x5*x9 - x1987*x2036 - x2010*x5 - x2035*x213 - 14*x2037*x449 - x2038 - x2040 - x2042 + 6*x27*x28*x29*x33 - x439*x5 - x451*x5) + x2043))) - m13*(-x1635*(x139*x2075 + x174*x310*x311 + x2077) - x2078 - x2080 + x4*(x139*x911 - x1818*x826 - x2072*x542 + x2073*x832 + x2074 + x817*(-x2069 + x801 - x805 - x807) + x824 - x828 + x831 + x835) - x62*x834) - m13*(-x139*x1564 - x1617 - x2078 + x2122 + x2131 + x26*x611 + x26*x825 + x26*x830 + x4*x819 - x4*x821 + x4*(X3*(x1297*x1549 + x1297*x2082 + x139*x1694 - x139*x2081 + x1520*x26 - x1556 - x1560 + x1811 + x1992*x339 - x2083*x331 + x2087 + x26*x416 - x26*x424 - x26*x918 + x669) + 6*Y3*x13*x14*x24*x320*x4*x47*x6*x8 + 4*Y3*x14*x24*x29*x320*x37*x4*x6*x8 + 30*Y3*x14*x42*x6*x8 + 2*Y3*x1549*x24*x37*x4*x75*x9 + 6*Y3*x1552*x24*x322*x33*x4*x9 + 3*Y3*x24*x4*x47*x48*x7*x9 + 3*x13*x14*x24*x4*x41*x6*x8 - x1314*x1549 - x1314*x2082 - x139*x2127 - x139*x523 + x14*x24*x29*x4*x47*x6*x8 + x14*x25*x320*x4*x47*x75*x8 - x1605 - x1616 - x1992*x287 - x2021*x2126 - x2128 + 2*x24*x320*x322*x37*x4*x9 + x25*x29*x4*x47*x6*x9 - x26*x587 - x26*x612 - x286*x576 - x289*x416 - x293*x919 - x787 + x789 + x8*(-x171*(-x1091*x2106 + x116*x14*x1549 + x1249*x38 - x131*x2089 - x14*x2094 - x1455 + x1488*x2100 - x1489*x2095 + x1498*x2082 - 26*x1498 - x1549*x177 + x1549*x184 + x1549*x1840 + x1549*x2097 - x1552*x177 + x1552*x180 - x1552*x206*x515 + x1552*x862 + x1596*x253 + x1611*x829 - x1704*x28 + x1715*x19 - x175*x1965 - x1798*x2011 + x19*x2104 - x19*x2105 - x2008*x2095 + x2057*x2101 + x2082*x345 + x2088*x8 - x2090*x28 + x2091*x8 + 9*x2092 + x2093*x857 - x2097 + x2098*x9 + x2099*x449 + x2102*x405 + x2107*x220 + x2113 - x235 - x238 + x253*x7 + x324*x550 - x464*x829 - 15*x863) - x2112) - x929)) - m22*(-x1391*x1485 + x14*x2144 - x1822*x4 + x1976 + x2034 - x210*x849 + x2146 + x4*(X3*(-x1215*x26*x8 + x1769 + x1770 + x1773 - x2001*x202 + x2139*x8 + x2140 + x2141) + 5*Y3*x10*x14*x24*x4*x47*x48*x6 + 2*Y3*x13*x24*x27*x37*x4*x5*x6*x8 + 3*x10*x13*x14*x25*x4*x41 - x14*x714 - x1675*x8 + x1792 - x1794 - x1797 + x1801 - x2026 - x2059*x491 - x2142*x8 - x2143 + 2*x25*x27*x37*x4*x5*x75*x8 + x25*x322*x4*x47*x8 - x5*(x171*(24*x10*x103*x27*x29*x320*x6*x8 + 6*x10*x13*x27*x320*x33*x6*x8 + 2*x10*x13*x27*x37*x8 + 6*x10*x27*x29*x33*x8 - 14*x1262*x1986 + 16*x14*x320*x37*x48*x6*x653 + 15*x14*x320*x42*x47*x6*x653 - x14*x380*x654 + 15*x14*x41*x42*x653 + 8*x14*x47*x48*x653 - x14*x673 - x1409*x2015*x76 - x1985*x2132 - x2038 - x2133*x8 - x2135 - x2138) + x2043) - x509 - x527)) - m23*(-x14*x1855 - x1763*x62 - x1765*x2151*x5 + x4*(x145*x823 + x16*x1763 + x162*x2148 + x1720*x2147 + x2149 + x242*x826*x97 + x6*x69)) - m33*(x14*x2156 - x1765*x2155 + x2033 + x4*(Y3*x62 - x14*x151*x319*x47*x838 + x1452*x838 + x161 + x1681*x1825 - x1682*x1828 + x1824 + x1826*x2152 - x2154*x8 - x414*x823 - x68*x7) + x62*x813 - x883) - x2169*(-x1451 - x1453 + x1765 - x1837*x4 - x1840*x26 + x2005 + x26*x869 + x4*(X3*(x1046 - x14*x2081 + x1549*x2157 + x1552*x851 - x161*x331 - x1697*x8 - x1774*x2158 - x1775*x26 + x2032 + x2082*x2157 + x2159*x339 + x26*x457 + x26*x460*x8 - x26*x461 + x68 - x853) + 6*Y3*x13*x14*x24*x320*x4*x47*x6 + 4*Y3*x14*x24*x29*x320*x37*x4*x6 + 2*Y3*x1549*x24*x37*x4*x75*x8 + 6*Y3*x1552*x24*x322*x33*x4*x8 + 3*Y3*x24*x4*x47*x48*x7*x8 + 3*x13*x14*x24*x4*x41*x6 + x14*x24*x29*x4*x47*x6 - x14*x523 - x1549*x2168 - x1552*x889 - x1700*x8 - x171*(x10*x2098 - x1089*x1798 - x1346*x14 + x14*x1701 + x14*x1707 + x14*x1708 + x14*x1973 - x14*x2095*x250 + x14*x2107*x262 - 36*x14*x2165 - x1549*x1752 + x1549*x2162 - x1552*x1742 + x1568*x1730 + x1585*x8 + x1587*x8 + x161*x1964 - x1705*x8 - x1710*x8 - x1712*x8 - x174*x624 + x1753*x2082 + x1777*x2166 + x1780*x2099 + x1838 - x1918 + 9*x197 + x202*x2082 - 26*x202 + x2103*x2164 - x2106*x933 + x2113 - x2160*x8 - x2161*x8 - x2162 + x2163*x8 + 24*x2167*x434 - x259) - x1772 - x2082*x2168 - x2109 - x2111 - x2126*x491 - x2140 - x2159*x287 - x226*x289 + 2*x24*x320*x322*x37*x4*x8 - x286*x863 - x289*x457 - x442*x507 + x890) + x882))
    g32 = x1003*(-m11*(-x1318*x4 - x1331*x26 - x1353*x139 + x2031*x27 + x2067 + x2196 + x2198 + x4*(X3*(x1074 + x1075 + x1085 - x2001*x276 + x2047 + x2170*x5 + x2191 - x26*x5*x903) + 2*Y3*x13*x14*x24*x37*x4*x5*x6*x8 + 5*Y3*x24*x27*x4*x47*x48*x6*x9 + x1128 - x1169 - x1171 - x1176 + x1182 - x1196*x27 + 3*x13*x25*x27*x4*x41*x9 + 2*x14*x25*x37*x4*x5*x75*x8 - x1651*x5 - x1876*x2193 - x1886 - x2062 - x2174*x5 - x2194 + x25*x322*x4*x47*x5 - x8*(x171*(24*x103*x14*x29*x320*x5*x6*x9 - x1042*x27*x380 - x1048*x27 + 6*x13*x14*x320*x33*x5*x6*x9 + 2*x13*x14*x37*x5*x9 - x131*x2187 + 6*x14*x29*x33*x5*x9 - x1985*x2036 - x2012*x5 - x2042 - x2135 - x2188*x449*x76 - x2189 + 16*x27*x28*x320*x37*x48*x6 + 15*x27*x28*x320*x42*x47*x6 + 15*x27*x28*x41*x42 + 8*x27*x28*x47*x48) + x2190))) + m12*x8*(x1446*x530 + x1447*x561 - x1894 + x2144 + x2185 - x530*(-X3*(x1188*x2003 + x1213*x26 + x1389 + x1390 - x1392 + x1395 - x1396 - x1397 + x199*x339 - x2001*x214 + x2139 + x2171 - x2210) + x1151 + x1188*x2022 - x1189*x507 + x1208 + x1432 + x1675 + x171*(x1091*x2213 + x1091*x2214 + x1099*x368*x761 + 16*x1132*x374 + x1139 + x1140 + x1142 + x1152 + x1164 - x1188*x1473 - x1188*x1998 - x1188*x2175 + x1188*x460 - x1190 - x1192 + x1193 + x1201 + x1534 - x2011*x2048 - x2050 - x2054 + x2179 - x2192 + 5*x2206 + x2207*x43 - x2208*x9 + x707) + x1876*x2215 + x1885 + x2142 + x2180 + x2217 - 5*x502*x729) + x564*x945) - m12*(-x1418*x2029 - x1861*x2145 + x1974 + x2025 - x2029*x529 + x210*x83 + x2146 - x27*x86 + x4*(X3*(x1389*x8 + x1394*x14 - x1459 + x1771 + x2000 - x2001*x215 - x2045*x210*x822 + x2141 + x2200*x331 + x332*x8 + x8*x911) + 3*Y3*x13*x24*x4*x41*x6*x8 + 15*Y3*x24*x27*x4*x41*x42*x5*x6*x8 + 5*Y3*x24*x27*x4*x47*x48*x5*x6*x8 + 2*x10*x14*x25*x37*x4*x75 - x1174*x2200 + 3*x13*x25*x27*x4*x41*x5*x8 + x1415*x170*x4*x8 - x1500 - x171*(x1145*x14 + x15*x2201 - x1789*x533 + x1791 - x1883*x8 + x1925) + x1800 - x1930 - x2027 - x210*x2202 - x2143 - x2193*x491 + x25*x4*x41*x75*x8 - x5*(x171*(16*x10*x27*x320*x37*x48*x6*x8 + 15*x10*x27*x320*x42*x47*x6*x8 + 15*x10*x27*x41*x42*x8 + 8*x10*x27*x47*x48*x8 + 24*x103*x14*x29*x320*x6*x653 - x1262*x1456*x7 + 6*x13*x14*x320*x33*x6*x653 + 2*x13*x14*x37*x653 + 6*x14*x29*x33*x653 - x1402*x8 - x1411*x8 - x1776*x2187 - x1987*x2132 - x2040 - x2138 - x2189 - x2199*x8) + x2190) - x510 - x892)) - m13*(-x1068*x2151*x8 - x27*x336 + x4*(x1032*x834 + x1077*x8 + x1438*x8 + x162*x1720 + x1913*x234 + x2147*x2148 + x2149) - x674*x834) - m22*(x1191*x2218 - x1391*x1655 - x1446*x27*x4 - 4*x1545 - x1861*x2065 + x1949 + x2028*x55 - x2030*x2063 + x2064 + x2144*x27 - 4*x2195 + x2198 + x4*(X3*(-4*x1072 + x1078 + x1219*x26*x279 + x1362*x1393 + x1367*x339 + x1373*x26 - x1815*x2065 + x1859 + x2044 - x2210*x5 + x2211) + 5*Y3*x10*x24*x27*x4*x47*x48*x6 + 4*Y3*x1188*x24*x29*x320*x37*x4*x5 + 4*Y3*x24*x29*x4*x47*x5*x6 + 3*x10*x13*x25*x27*x4*x41 + 2*x10*x25*x27*x37*x4*x75 - x1017*x2209 - x1219*x287*x55 - x1367*x287 - x1519 - x1540 - x171*(x1121 - 5*x1122 + x1145*x27 - x1399*x402 + x1946 + x2201*x39 - x418*x653) - x1878*x26 - x1887 - x1951 - x2061 - x2068 - x2194 - x2196 - x2215*x2216 - x2217*x5 - x27*x714 - x293*x323*x37*x5 - x5*(x1151 + x171*(-x10*x2208 + x108*x2203 + x1143 - x1148*x1889 + x1150 - x1188*x1781 + x1188*x1980 - x1188*x1982 + x1188*x1990 + x1188*x480 - x1189*x1588 - x1189*x945 - x1191*x195 + x1219*x1607 - x123*x210*x459 + x1266*x27 - x133*x1674 + x1334*x2207 - x1335*x380 - x1336*x380 - x1337*x380 - x1337*x6 - x1338 - x1339*x1979 + x1339*x1984 - x1339*x1988 - x1340*x446 + x1341*x206*x459 - x1345 - 33*x1525 + x1657*x27 - x1830 - 3*x1860 + x1863*x256 + x1864 + 8*x1865 - x1867*x1985 - x1867*x1987 + 16*x1869 + x1870 + x1872 + x1888*x41 - x1983*x683 + x1993*x208 - x1996*x210 + x2177*x459 + x219*x2203 + x2205 + 17*x2206 + x27*x681 + x483 + 8*x718)))) - m23*(-x1319*x84 - x1635*(x1632*x1763*x27 + x2075*x210 + x2077) - x2080 - x2219 + x4*(-x1188*x2072 - x1228*x826 + x1831*x2073 + x1910 - x1912 + x1914 + x1915 + x2074 + x210*x911 + x817*(x1905 - x1906 - x1907 - x2069))) - m23*(x1306*x26 - x1564*x210 + x1856*x27 + x1908*x4 - x1909*x4 + x1911*x26 - x1972 + x2131 - x2219 + x2232 + x4*(X3*(-x1136*x26 + x1140*x26 - x1145*x26 + x1207 + x1528*x26 + x1549*x711 + x1694*x210 - x1958 - x1960 - x2081*x210 + x2082*x711 + x2087 + x2206*x339 + x223 - x331*x762) + 2*Y3*x10*x1549*x24*x37*x4*x75 + 6*Y3*x10*x1552*x24*x322*x33*x4 + 3*Y3*x10*x24*x4*x47*x48*x7 + 6*Y3*x13*x24*x27*x320*x4*x47*x5*x6 + 4*Y3*x24*x27*x29*x320*x37*x4*x5*x6 + 30*Y3*x27*x42*x5*x6 + 2*x10*x24*x320*x322*x37*x4 + x10*x25*x29*x4*x47*x6 - x1140*x289 - x1154 - x1231*x26 + 3*x13*x24*x27*x4*x41*x5*x6 - x1313 + x1315 - x1549*x788 - x1931*x459 - x1970 - x1971 - x2082*x788 - x210*x2127 - x210*x523 - x2128 - x2206*x287 - x2216*x2233 + x24*x27*x29*x4*x47*x5*x6 + x25*x27*x320*x4*x47*x5*x75 - x26*x743 - x286*x734 + x5*(-x171*(x1031*x2225 + x1172*x2093 + x1214*x1549*x27 + x1249*x668 - x1262*x2089 - x1267*x1549 - x1267*x1552 + x1268*x1549 - x1274 - x1346*x27 + x1362*x1715 + x1362*x2104 - x1367*x1965 + x1371*x1552 + x1374*x2082 - 36*x1406*x37*x374 + x1409*x2099 + x1410*x1596 + x1535*x674 + x1549*x157 + x1549*x2224 - 15*x156 - x1658*x2095 + x1701*x27 - x1704*x653 + 9*x1748 + x1868*x2100 + x1871*x2102 - x1934 + x1935*x2082 - 26*x1935 + x1964*x677 - 20*x2037*x327 - x2041*x2095 + x2088*x5 - x2090*x653 + x2091*x5 + x2107*x2137 - x2167*x2226 - x2220*x55 + x2221*x5 + x2222*x5 - x2223*x653 - x2224 + x2229 - x84) - x2228))) - m33*(-x1068*x2155 + x1319*x224 - x1380 + x2156*x27 + x2197 + x4*(-Y3*x1319*x414 - x1016*x7 - x112*x2072 + x1321 + x1323*x1681 + x1325*x2152 - x1328*x1682 + x1945*x826 - x2154*x5 + x27*x569 + x677)) - x2238*(x1068 - x1433*x4 - x157*x26 - x1932 - x1933 + x2211 + x2226 + x26*x678 + x4*(X3*(x1016 - x1086*x2158 - x1088*x26 + x1109*x26 - x1114*x26 + x1355*x1552 - x1358 + x1549*x2066 - x1697*x5 + x176*x26*x417 + x2066*x2082 - x2081*x27 + x2218 + x26*x460*x5 - x331*x677 + x670) + 6*Y3*x13*x24*x27*x320*x4*x47*x6 + 2*Y3*x1549*x24*x37*x4*x5*x75 + 6*Y3*x1552*x24*x322*x33*x4*x5 + 4*Y3*x24*x27*x29*x320*x37*x4*x6 + 3*Y3*x24*x4*x47*x48*x5*x7 - x1081 - x1109*x289 + 3*x13*x24*x27*x4*x41*x6 - x1383*x1552 + x1384 - x1549*x2237 - x156*x286 - x1700*x5 - x171*(x1027*x1549 - x1028*x1549 - x1028*x1552 + x104*x898 - x1120 + x117*x1549 - x1180*x2223 + x127*x2107 - x1278*x2095*x27 + x1280*x1612 + x1440 - x1506 + x1507*x1552 + x1549*x2234 - x1549*x281 + x1568*x53 + x1585*x5 + x1597*x27 + x1606*x27 - x1610*x5 + x2041*x98 + x2082*x276 + x2082*x282 - x2094*x27 + x2099*x656 + x2103*x2235 - x2110*x5 - x2114*x5 - x2115*x5 - 36*x2120*x27 + x2121*x5 - x2226*x2236 + x2229 - x2234 + 24*x2236*x55 - x230*x87 - 26*x276 + 9*x96) - x1876*x2233 - x2082*x2237 - x2191 - x2227 + x24*x27*x29*x4*x47*x6 + 2*x24*x320*x322*x37*x4*x5 - x27*x287*x417 - x27*x478 - x27*x523 - x289*x87 - x373*x5*x507)))
    g33 = x1003*(-m11*(-x2277 - x2278 - x2279 + x2281 + x2283 - x2292*x9 - x2293 + 3*x303*x530*x9 - x530*(-X3*(x1091*x22 + x1198 - x1297 + x139*x1696 + x139*x1697 - x1551 - x1554 - x1562 + x1645*x26 + x1810 - x1936*x366 + x2239 - x26*x423*x488 + x26*x920 + x331*x574) + 6*Y3*x13*x24*x319*x530*x556*x6*x9 + 2*Y3*x1682*x24*x530*x557*x75*x9 + 6*Y3*x1685*x24*x322*x530*x558*x9 + 8*Y3*x24*x48*x530*x556*x7*x9 + x10*x170*x2276*x530 - x1254 - x1598*x629 + x2277 + x2278 + x2279 - x2280*x566 - x2281 - x2283 - x2284*x566 - x2286*x521 - x2288*x9 - x2291 - x590*(-x1091*x2261 + x1245*x531 + x1247*x1682 - x1247*x1685 + x1599 + x1602 - x2255*x44 - x2257 + x2258 + x2259*x9 - x2260*x9 + x2263*x9 + x2264*x7 + x2267 + x601) - x8*(x171*(x1042*x1596 + x1042*x7 - x1044*x2095 + x1146*x2015 + x1264*x98 - x131*x2117 + x131*x2244 + x14*x2088 + x14*x2091 + x14*x2221 + x14*x2222 - x1488*x2247 + 10*x1498 - x15*x2220 + 30*x15*x2236 + x1549*x193 + x1549*x232 + x1549*x321 - x1549*x345 - x1549*x864 + x1549*x870 + x1552*x225 - x1552*x864 - x1588*x405 - x1704*x19 + x1726*x2245 + x179*x2107 + x1840 + x19*x2052*x374 - x19*x2223 - x19*x2250 - x1986*x2248 - 26*x2092 + x2095*x238 - x2095*x882 + x2104*x28 + x2225*x2252 - x2240 - x2242 + x2243*x28 - x2246 - x2249*x449 - x2251 + x2252*x2253 + x2254 - 16*x315 - x329 - x342 + x370*x38 - x62 + x622*x8 + x861 - x868) + x2254))) - m12*x5*(-x2327 + 3*x303*x530*x8 - x530*x8*x820 - x530*(-X3*(x14*x1473*x26 + x14*x1697 - x1491*x26 - x1549*x2032 + x1549*x851 - x1774*x2312 + x1778*x26 - x2013*x26 + x2032 + x2081*x8 - x2157 - x2202 - x2311*x8 + x233*x331 + x26*x41*x874) - x1490*x629 + x1490 + x1687*x233*x627 - x171*(54*x10*x118*x1568*x47*x8 + 30*x10*x13*x14*x320*x33*x7 + 4*x10*x13*x1549*x37*x6*x8 + 6*x10*x13*x1552*x37*x6*x8 + 6*x10*x13*x320*x47*x8 + 14*x10*x14*x320*x37*x48*x7 + 10*x10*x14*x47*x48*x6 + 3*x10*x1549*x47*x48*x6*x8 + 12*x10*x1552*x29*x33*x6*x8 + 105*x10*x1568*x20*x41*x8 + 10*x10*x1568*x37*x42*x8 + 105*x10*x20*x7*x8 + 8*x10*x29*x320*x37*x8 - x1052 + 6*x13*x320*x47*x7*x8 + 9*x13*x41*x6*x8 - x1345*x829 + 2*x14*x1549*x37*x6*x75 + 6*x14*x1552*x322*x33*x6 + 4*x14*x1568*x47*x48 - x14*x1705 - x14*x1712 - x14*x2297 + 4*x14*x320*x322*x37 - x14*x488*x7 - x1490 - x1549*x1753 - x1549*x881 - x1552*x881 - x1766 - x1842 - 26*x197 - x2095*x251 - x2164*x219 - 34*x2165*x8 - x2167*x238 - x2240 - x2242 - x2246 - x2251 + 2*x29*x320*x37*x7*x8 - 4*x315 - x342 - x876) + x2276*x2324 - x2286*x2325 + x2313*x2324 - x2315*x8 - x2316*x8 + x2318*x2325 + x2319*x8 + x2321*x2326 - x2322*x2326 + x2327 + x629*x874 + x875)) - m12*x8*(-x2323 + 3*x303*x5*x530 - x5*x530*x820 - x530*(-X3*(-x1086*x2312 + x1094*x26 + x1355*x1549 - x1512*x26 - x1549*x2218 + x158*x26 + x1697*x27 + x2039*x26 - x2060 - x2066 + x2081*x5 - x2212*x26 + x2218 - x2311*x5 + x331*x761) + x147*x629 - x1511*x629 + x1511 + x1687*x2287*x84 - x171*(-x1070 - x1099*x2223 + 54*x118*x1568*x47*x5*x9 - x1279*x2095 + 4*x13*x1549*x37*x5*x6*x9 + 6*x13*x1552*x37*x5*x6*x9 + 30*x13*x27*x320*x33*x7*x9 + 6*x13*x320*x47*x5*x7 + 6*x13*x320*x47*x5*x9 + 9*x13*x41*x5*x6 - x1379*x1549 - x1379*x1552 - 4*x150 - x1511 + 2*x1549*x27*x37*x6*x75 - x1549*x282 + 3*x1549*x47*x48*x5*x6*x9 + 6*x1552*x27*x322*x33*x6 + 12*x1552*x29*x33*x5*x6*x9 + 105*x1568*x20*x41*x5*x9 + 4*x1568*x27*x47*x48 + 10*x1568*x37*x42*x5*x9 - x1610*x27 - x1858 + 105*x20*x5*x7*x9 - x2035*x488 - x2094*x5 - 34*x2120*x5 - x219*x2235 - x2236*x84 - x2249*x656 - x2294 - x2295 - x2296 - x2298 + 4*x27*x320*x322*x37 + 14*x27*x320*x37*x48*x7*x9 + 10*x27*x47*x48*x6*x9 + 2*x29*x320*x37*x5*x7 + 8*x29*x320*x37*x5*x9 - x45 - x686 - x690 - 26*x96) - x2286*x2317 + x2303*x2314 + x2313*x2314 - x2315*x5 - x2316*x5 + x2317*x2318 + x2319*x5 + x2320*x2321 - x2320*x2322 + x2323 + x685)) + m13*x2347*x8 - m22*(-x10*x2292 + 3*x10*x303*x530 - x2293 - x2304 - x2305 - x2306 + x2307 + x2308 - x530*(-X3*(x10*x2081 + x1147*x26 + x1206 + x1529*x26 - x1663*x459*x76 + x1696*x210 + x1697*x210 + x1709*x331 + x1808 - x1939*x26 - x1954 - x1956 - x1961 + x2239 - x711) + 6*Y3*x10*x13*x24*x319*x530*x556*x6 + 2*Y3*x10*x1682*x24*x530*x557*x75 + 6*Y3*x10*x1685*x24*x322*x530*x558 + 8*Y3*x10*x24*x48*x530*x556*x7 - x10*x2288 - x1251 - x1253 - x1448*x2280 - x1448*x2284 + x170*x2303*x530*x9 - x1796*x2286 - x2291 + x2304 + x2305 + x2306 - x2307 - x2308 - x5*(x171*(x112*x2225 + x112*x2253 + x1146*x2188 - x1148*x2248 - x1262*x2117 + x1262*x2244 + x1269*x1549 - x1362*x1704 - x1362*x2223 - x1362*x2250 + x1368*x1549 + x1369 - x1374*x1549 - x1375*x1549 - x1375*x1552 - 16*x150 + x1549*x185 + x1549*x679 + x1552*x676 + x157 - x1588*x1871 + x1596*x654 - 26*x1748 - x1853 - x1858 - x1868*x2247 + 10*x1935 + x199*x2186 + x2088*x27 - x2088*x330*x653 + x2091*x27 - x2095*x2226 + x2095*x84 + x2104*x653 + x2107*x671 + x2165*x2186 + 30*x2167*x39 + x2221*x27 + x2222*x27 + x2243*x653 + x2245*x58 - x2294 - x2295 - x2296 - x2297*x27 - x2298 + x2299 - x27*x41*x464 + x370*x668 + x5*x622 + x654*x7 - x674 - x675) + x2299) - x590*(x10*x2259 - x10*x2260 + x10*x2263 + x10*x2274 + x1248*x1682 - x1248*x1685 + x1603 + x1901 + x1969 - x2255*x258 - x2261*x933 + x2267 - x2300 + x2301 + x2302*x7) - x629*x949)) + m23*x2347*x5 - m33*(6*x13*x308*x7 - x151*x308 - x2310 + x530*x647*(x1904*x301 + x2076*x308 - x300**4*x642 + x646) - x530*(x1549*x604*x988 - x1578*x986 + x1682*x1687*x317*x988 + x1684*x319**3 + x2310 - x308*x391 + x308*x75 + x479*x986 + x817*(-6*X3 + 60*Y3*x322*x7 + 5*x1568*x308*x322 + 10*x1568*x322 - x230*x308 - x2309*x803 - x631))) - x2169*(x2345 + x530*(x114*x2343 + x2342*(-x10*x2329 - x10*x2330 - x1133*x1549 - x1145*x1549 + x1147*x1549 + x1525*x1682 + 16*x1525 + x1549*x947 + x1667 + x1682*x2054 - x1703*x6 + x1937 + x1953 + x1955 + x1957 + x1959 - x1963 - x2107*x933 + x2177*x2338 - x2205 - x2332*x945 + x2335*x262 + x2336*x262 + x2337*x258 + x2341 + x348) + x2344)) - x2238*(x2345 + x530*(x1144*x2343 + x2342*(-x1091*x2107 + x126*x2335 + x126*x2336 + x1462 + x1549*x473 - x1549*x917 - x1549*x918 + x1549*x920 + x1550 + x1553 + x1555 + x1559 - x1572 - x1608*x6 + x1642 - x1991 - x2329*x9 - x2330*x9 + x2331*x401*x61 + x2331*x94 - x2332*x486 + x2337*x44 + 16*x2338*x61 + x2341 + 16*x366) + x2344)))
    return g11, g12, g13, g21, g22, g23, g31, g32, g33

#!/usr/bin/env python3
"""Independent scalar evaluation of SWE interface fluxes and the Stoker
dam-break middle state. Prints values that are frozen into the C++ tests."""
import math

G = 9.81


def phys_x(h, hu, hv):
    if h < 1e-6:
        return (0.0, 0.5 * G * h * h, 0.0)
    u, v = hu / h, hv / h
    return (hu, hu * u + 0.5 * G * h * h, hu * v)


def speed_x(h, hu):
    if h < 1e-6:
        return 0.0
    return abs(hu / h) + math.sqrt(G * h)


def rusanov(l, r, a=None):
    fl, fr = phys_x(*l), phys_x(*r)
    if a is None:
        a = max(speed_x(l[0], l[1]), speed_x(r[0], r[1]))
    return tuple(0.5 * (fl[k] + fr[k]) - 0.5 * a * (r[k] - l[k]) for k in range(3))


def roe(l, r, fix=True):
    hl, hul, hvl = l
    hr, hur, hvr = r
    ul, vl = hul / hl, hvl / hl
    ur, vr = hur / hr, hvr / hr
    sl, sr = math.sqrt(hl), math.sqrt(hr)
    uh = (sl * ul + sr * ur) / (sl + sr)
    vh = (sl * vl + sr * vr) / (sl + sr)
    hh = 0.5 * (hl + hr)
    ch = math.sqrt(G * hh)
    dh, dhu, dhv = hr - hl, hur - hul, hvr - hvl
    a1 = ((uh + ch) * dh - dhu) / (2 * ch)
    a2 = dhv - vh * dh
    a3 = (dhu - (uh - ch) * dh) / (2 * ch)
    lam = [uh - ch, uh, uh + ch]
    d = 0.1 * ch
    mags = []
    for x in lam:
        m = abs(x)
        if fix and m < d:
            m = (x * x + d * d) / (2 * d)
        mags.append(m)
    r1 = (1.0, uh - ch, vh)
    r2 = (0.0, 0.0, 1.0)
    r3 = (1.0, uh + ch, vh)
    diss = [mags[0] * a1 * r1[k] + mags[1] * a2 * r2[k] + mags[2] * a3 * r3[k] for k in range(3)]
    fl, fr = phys_x(*l), phys_x(*r)
    return tuple(0.5 * (fl[k] + fr[k]) - 0.5 * diss[k] for k in range(3))


def stoker_middle(hl, hr):
    cl = math.sqrt(G * hl)

    def phi(hm):
        return 2 * (cl - math.sqrt(G * hm)) - (hm - hr) * math.sqrt(0.5 * G * (hm + hr) / (hm * hr))

    lo, hi = hr, hl
    for _ in range(300):
        mid = 0.5 * (lo + hi)
        if phi(mid) > 0:
            lo = mid
        else:
            hi = mid
    hm = 0.5 * (lo + hi)
    um = 2 * (cl - math.sqrt(G * hm))
    return hm, um, hm * um / (hm - hr)


if __name__ == "__main__":
    print("phys_x(1,2,0.5)", repr(phys_x(1, 2, 0.5)))
    print("speed(4,8)", repr(speed_x(4, 8)))
    pair = ((2.0, 0.0, 0.0), (1.0, 0.0, 0.0))
    rus = rusanov(*pair)
    print("rusanov", [repr(x) for x in rus])
    a = max(speed_x(2, 0), speed_x(1, 0))
    print("lf 2a", [repr(x) for x in rusanov(*pair, a=2 * a)])
    print("roe", [repr(x) for x in roe(*pair)])
    trans = ((1.0, 2.832, 0.0), (0.9, 0.9 * 3.154, 0.0))
    print("roe transonic fixed", [repr(x) for x in roe(*trans)])
    print("roe transonic unfixed", [repr(x) for x in roe(*trans, fix=False)])
    print("stoker(1,0.1)", [repr(x) for x in stoker_middle(1.0, 0.1)])
    print("dt", repr(0.45 * (1 / 128) / math.sqrt(G)))

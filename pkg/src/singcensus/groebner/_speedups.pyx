# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Groebner kernel with the same contract as kernel_pure.

Terms are packed into uint64 machine words: the divisibility key holds one
exponent per byte (guard bits catch overflow), the order key is recomputed
from the divisibility key on demand.  Capacity envelope: at most 8 variables,
every exponent below 64 (including those of products formed during
reduction), modulus below 2**31.  Anything outside raises
KernelCapacityError and the dispatcher retries in pure Python.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memset

from singcensus.errors import KernelCapacityError

cdef int MAXV = 8
cdef int MAXE = 63
cdef uint64_t DIV_GUARD = <uint64_t>0x8080808080808080
cdef uint64_t MUL_GUARD = <uint64_t>0xC0C0C0C0C0C0C0C0

cdef int GREVLEX = 0
cdef int LEX = 1
cdef int ELIM0 = 2


cdef struct Term:
    uint64_t key
    uint64_t dkey
    uint64_t c


cdef class TermVec:
    """Growable C array of terms, kept sorted descending by order key."""
    cdef Term* t
    cdef int n
    cdef int cap

    def __cinit__(self, int cap=8):
        if cap < 1:
            cap = 1
        self.t = <Term*> malloc(cap * sizeof(Term))
        if self.t == NULL:
            raise MemoryError()
        self.n = 0
        self.cap = cap

    def __dealloc__(self):
        if self.t != NULL:
            free(self.t)

    cdef int push(self, uint64_t key, uint64_t dkey, uint64_t c) except -1:
        cdef Term* nt
        if self.n == self.cap:
            nt = <Term*> realloc(self.t, 2 * self.cap * sizeof(Term))
            if nt == NULL:
                raise MemoryError()
            self.t = nt
            self.cap *= 2
        self.t[self.n].key = key
        self.t[self.n].dkey = dkey
        self.t[self.n].c = c
        self.n += 1
        return 0

    @property
    def lead_key(self):
        return self.t[0].key


cdef inline uint64_t key_of(uint64_t dkey, int nvars, int order):
    cdef uint64_t e[8]
    cdef uint64_t deg = 0
    cdef uint64_t k = 0
    cdef int j
    for j in range(nvars):
        e[j] = (dkey >> (8 * j)) & 0x7F
        deg += e[j]
    if order == GREVLEX:
        for j in range(1, nvars):
            k |= (<uint64_t>MAXE - e[j]) << (6 * (j - 1))
        k |= deg << (6 * (nvars - 1))
    elif order == LEX:
        for j in range(nvars):
            k |= e[j] << (6 * (nvars - 1 - j))
    else:  # ELIM0: variable 0 first, grevlex on the rest
        if nvars == 1:
            k = e[0]
        else:
            for j in range(2, nvars):
                k |= (<uint64_t>MAXE - e[j]) << (6 * (j - 2))
            k |= (deg - e[0]) << (6 * (nvars - 2))
            k |= e[0] << (6 * (nvars - 2) + 12)
    return k


cdef inline bint divides(uint64_t da, uint64_t db):
    """Slotwise da <= db (all exponents), valid while every slot < 128."""
    return (((db | DIV_GUARD) - da) & DIV_GUARD) == DIV_GUARD


cdef inline uint64_t lcm_dkey(uint64_t da, uint64_t db, int nvars):
    cdef uint64_t out = 0
    cdef uint64_t a, b
    cdef int j
    for j in range(nvars):
        a = (da >> (8 * j)) & 0xFF
        b = (db >> (8 * j)) & 0xFF
        out |= (a if a > b else b) << (8 * j)
    return out


cdef inline uint64_t mul_dkey(uint64_t da, uint64_t db) except *:
    cdef uint64_t d = da + db
    if d & MUL_GUARD:
        raise KernelCapacityError("product exponent exceeds the compiled kernel range")
    return d


cdef uint64_t inv_mod(uint64_t a, uint64_t p):
    cdef int64_t t = 0, newt = 1, r = <int64_t>p, newr = <int64_t>a
    cdef int64_t q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += <int64_t>p
    return <uint64_t>t


cdef int check_env(int nvars, object p) except -1:
    if nvars < 1 or nvars > MAXV:
        raise KernelCapacityError(
            f"compiled kernel handles 1..{MAXV} variables, not {nvars}"
        )
    if p >= (1 << 31):
        raise KernelCapacityError("compiled kernel requires p < 2**31")
    return 0


cdef TermVec pack(object terms, int nvars, int order, uint64_t p):
    """Python term list -> TermVec sorted descending, like coefficients
    merged, zeros dropped."""
    cdef dict acc = {}
    cdef uint64_t d, k
    cdef object exps, c0
    cdef int j, e
    cdef uint64_t c
    for exps, c0 in terms:
        c = <uint64_t>(c0 % p)
        if c == 0:
            continue
        d = 0
        for j in range(nvars):
            e = exps[j]
            if e > MAXE:
                raise KernelCapacityError(
                    f"exponent {e} exceeds the compiled kernel range"
                )
            d |= (<uint64_t>e) << (8 * j)
        k = key_of(d, nvars, order)
        if k in acc:
            acc[k][1] = (acc[k][1] + c) % p
        else:
            acc[k] = [d, c]
    cdef TermVec out = TermVec(max(len(acc), 1))
    cdef object kk
    for kk in sorted(acc, reverse=True):
        if acc[kk][1]:
            out.push(<uint64_t>kk, <uint64_t>acc[kk][0], <uint64_t>acc[kk][1])
    return out


cdef list unpack(TermVec f, int nvars):
    cdef list out = []
    cdef int i, j
    cdef uint64_t d
    for i in range(f.n):
        d = f.t[i].dkey
        exps = tuple([<int>((d >> (8 * j)) & 0xFF) for j in range(nvars)])
        out.append((exps, <int>f.t[i].c))
    return out


cdef TermVec monic(TermVec f, uint64_t p):
    cdef uint64_t lc = f.t[0].c
    cdef uint64_t inv
    cdef int i
    if lc != 1:
        inv = inv_mod(lc, p)
        for i in range(f.n):
            f.t[i].c = (f.t[i].c * inv) % p
    return f


cdef TermVec sub_mul(
    TermVec work, int start, TermVec g, uint64_t dq, uint64_t c,
    int nvars, int order, uint64_t p,
):
    """work[start:] minus c * x^q * g, both descending; fresh vector."""
    cdef TermVec res = TermVec(work.n - start + g.n)
    cdef int i = start, j = 0
    cdef uint64_t kt, dt, nc
    while i < work.n and j < g.n:
        dt = mul_dkey(g.t[j].dkey, dq)
        kt = key_of(dt, nvars, order)
        if work.t[i].key > kt:
            res.push(work.t[i].key, work.t[i].dkey, work.t[i].c)
            i += 1
        elif work.t[i].key < kt:
            res.push(kt, dt, (p - (g.t[j].c * c) % p) % p)
            j += 1
        else:
            nc = (work.t[i].c + p - (g.t[j].c * c) % p) % p
            if nc:
                res.push(kt, work.t[i].dkey, nc)
            i += 1
            j += 1
    while i < work.n:
        res.push(work.t[i].key, work.t[i].dkey, work.t[i].c)
        i += 1
    while j < g.n:
        dt = mul_dkey(g.t[j].dkey, dq)
        res.push(key_of(dt, nvars, order), dt, (p - (g.t[j].c * c) % p) % p)
        j += 1
    return res


cdef TermVec reduce_full(
    TermVec f, list basis, int nvars, int order, uint64_t p
):
    """Full normal form of f against monic divisors."""
    cdef TermVec out = TermVec()
    cdef TermVec work = f
    cdef TermVec red
    cdef int start = 0
    cdef int gi, nb = len(basis)
    cdef uint64_t d0
    while start < work.n:
        d0 = work.t[start].dkey
        red = None
        for gi in range(nb):
            if divides((<TermVec>basis[gi]).t[0].dkey, d0):
                red = <TermVec>basis[gi]
                break
        if red is None:
            out.push(work.t[start].key, work.t[start].dkey, work.t[start].c)
            start += 1
            continue
        work = sub_mul(
            work, start, red, d0 - red.t[0].dkey, work.t[start].c,
            nvars, order, p,
        )
        start = 0
    return out


cdef TermVec spoly(
    TermVec f, TermVec g, int nvars, int order, uint64_t p
):
    cdef uint64_t df = f.t[0].dkey, dg = g.t[0].dkey
    cdef uint64_t dl = lcm_dkey(df, dg, nvars)
    cdef TermVec left = TermVec(f.n)
    cdef uint64_t dt
    cdef int i
    for i in range(f.n):
        dt = mul_dkey(f.t[i].dkey, dl - df)
        left.push(key_of(dt, nvars, order), dt, f.t[i].c)
    return sub_mul(left, 0, g, dl - dg, 1, nvars, order, p)


cdef list interreduce(list G, int nvars, int order, uint64_t p):
    cdef list decorated = []
    cdef int pos = 0
    for fo in G:
        decorated.append(((<TermVec>fo).t[0].key, pos, fo))
        pos += 1
    decorated.sort()
    cdef list kept = []
    cdef TermVec f, r
    cdef uint64_t d
    cdef bint changed, hit
    cdef int idx
    for _, _, fo in decorated:
        f = <TermVec>fo
        d = f.t[0].dkey
        hit = False
        for go in kept:
            if divides((<TermVec>go).t[0].dkey, d):
                hit = True
                break
        if not hit:
            kept.append(f)
    changed = True
    while changed:
        changed = False
        for idx in range(len(kept)):
            others = kept[:idx] + kept[idx + 1:]
            r = monic(
                reduce_full(<TermVec>kept[idx], others, nvars, order, p), p
            )
            if not tv_equal(r, <TermVec>kept[idx]):
                kept[idx] = r
                changed = True
    decorated = []
    pos = 0
    for fo in kept:
        decorated.append(((<TermVec>fo).t[0].key, pos, fo))
        pos += 1
    decorated.sort(reverse=True)
    return [fo for _, _, fo in decorated]


cdef bint tv_equal(TermVec a, TermVec b):
    cdef int i
    if a.n != b.n:
        return False
    for i in range(a.n):
        if (
            a.t[i].key != b.t[i].key
            or a.t[i].dkey != b.t[i].dkey
            or a.t[i].c != b.t[i].c
        ):
            return False
    return True


cdef struct Pair:
    uint64_t kl
    uint64_t dl
    int i
    int j


cdef inline size_t pend_index(int i, int j):
    # triangular index, i < j
    return (<size_t>j * (j - 1)) // 2 + <size_t>i


def reduced_groebner(gens, int nvars, object p, int order=0):
    """Canonical reduced basis as term lists; see kernel_pure for the
    contract."""
    check_env(nvars, p)
    cdef uint64_t pp = <uint64_t>p
    cdef list polys = []
    cdef TermVec f, r, s
    for g in gens:
        f = pack(g, nvars, order, pp)
        if f.n:
            polys.append(monic(f, pp))
    if not polys:
        return []
    cdef TermVec unit = TermVec(1)
    unit.push(key_of(0, nvars, order), 0, 1)

    cdef list G = []
    cdef Pair* pairs = NULL
    cdef size_t npairs = 0, pair_cap = 0
    cdef unsigned char* pend = NULL
    cdef size_t pend_cap = 0
    cdef size_t idx, best, need
    cdef Pair* np_
    cdef unsigned char* nb
    cdef int i, j, t
    cdef uint64_t dl, kl, di, dj
    cdef bint skip

    try:
        for fo in polys:
            f = <TermVec>fo
            if f.t[0].dkey == 0:  # constant generator: unit ideal
                return [unpack(unit, nvars)]
            # add to G, queueing pairs with everything already present
            t = len(G)
            G.append(f)
            need = pend_index(0, t) + <size_t>t if t > 0 else 0
            if need > pend_cap:
                need = need * 2 + 64
                nb = <unsigned char*> realloc(pend, need)
                if nb == NULL:
                    raise MemoryError()
                memset(nb + pend_cap, 0, need - pend_cap)
                pend = nb
                pend_cap = need
            for i in range(t):
                dl = lcm_dkey((<TermVec>G[i]).t[0].dkey, f.t[0].dkey, nvars)
                if npairs == pair_cap:
                    pair_cap = pair_cap * 2 + 64
                    np_ = <Pair*> realloc(pairs, pair_cap * sizeof(Pair))
                    if np_ == NULL:
                        raise MemoryError()
                    pairs = np_
                pairs[npairs].kl = key_of(dl, nvars, order)
                pairs[npairs].dl = dl
                pairs[npairs].i = i
                pairs[npairs].j = t
                npairs += 1
                pend[pend_index(i, t)] = 1

        while npairs:
            best = 0
            for idx in range(1, npairs):
                if pairs[idx].kl < pairs[best].kl or (
                    pairs[idx].kl == pairs[best].kl
                    and (
                        pairs[idx].i < pairs[best].i
                        or (
                            pairs[idx].i == pairs[best].i
                            and pairs[idx].j < pairs[best].j
                        )
                    )
                ):
                    best = idx
            kl = pairs[best].kl
            dl = pairs[best].dl
            i = pairs[best].i
            j = pairs[best].j
            npairs -= 1
            pairs[best] = pairs[npairs]
            pend[pend_index(i, j)] = 0

            di = (<TermVec>G[i]).t[0].dkey
            dj = (<TermVec>G[j]).t[0].dkey
            if dl == di + dj:
                continue  # coprime leading terms
            skip = False
            for t in range(len(G)):
                if t == i or t == j:
                    continue
                if divides((<TermVec>G[t]).t[0].dkey, dl):
                    if (
                        pend[pend_index(i, t) if i < t else pend_index(t, i)] == 0
                        and pend[pend_index(j, t) if j < t else pend_index(t, j)] == 0
                    ):
                        skip = True
                        break
            if skip:
                continue
            s = spoly(<TermVec>G[i], <TermVec>G[j], nvars, order, pp)
            r = reduce_full(s, G, nvars, order, pp)
            if r.n:
                if r.t[0].dkey == 0:
                    return [unpack(unit, nvars)]
                # append and queue pairs (same as above)
                t = len(G)
                G.append(monic(r, pp))
                need = pend_index(0, t) + <size_t>t
                if need > pend_cap:
                    need = need * 2 + 64
                    nb = <unsigned char*> realloc(pend, need)
                    if nb == NULL:
                        raise MemoryError()
                    memset(nb + pend_cap, 0, need - pend_cap)
                    pend = nb
                    pend_cap = need
                for i in range(t):
                    dl = lcm_dkey((<TermVec>G[i]).t[0].dkey, r.t[0].dkey, nvars)
                    if npairs == pair_cap:
                        pair_cap = pair_cap * 2 + 64
                        np_ = <Pair*> realloc(pairs, pair_cap * sizeof(Pair))
                        if np_ == NULL:
                            raise MemoryError()
                        pairs = np_
                    pairs[npairs].kl = key_of(dl, nvars, order)
                    pairs[npairs].dl = dl
                    pairs[npairs].i = i
                    pairs[npairs].j = t
                    npairs += 1
                    pend[pend_index(i, t)] = 1
    finally:
        if pairs != NULL:
            free(pairs)
        if pend != NULL:
            free(pend)

    return [unpack(f, nvars) for f in interreduce(G, nvars, order, pp)]


def normal_form(f, basis, int nvars, object p, int order=0):
    """Remainder of f modulo a (reduced) basis, as a term list."""
    check_env(nvars, p)
    cdef uint64_t pp = <uint64_t>p
    cdef TermVec work = pack(f, nvars, order, pp)
    if work.n == 0:
        return []
    cdef list packed = []
    cdef TermVec pg
    for g in basis:
        pg = pack(g, nvars, order, pp)
        if pg.n:
            packed.append(monic(pg, pp))
    return unpack(reduce_full(work, packed, nvars, order, pp), nvars)

"""Helpers shared by the classifiers."""

import numpy as np

from ..fincat import Functor, NatTrans, product


def unique_nat(F, G):
    """The only transformation F => G when every needed hom-set is a singleton."""
    D = F.tgt
    comps = []
    for a, b in zip(F.obj_map, G.obj_map):
        hom = D.hom(a, b)
        if len(hom) != 1:
            raise ValueError("hom(%s, %s) has %d elements; no unique transformation"
                             % (D.obj_id(a), D.obj_id(b), len(hom)))
        comps.append(hom[0])
    return NatTrans(F, G, np.array(comps, dtype=np.int64))


def thin_functor(src, tgt, obj_map):
    """Functor into a preorder category determined by its object map."""
    obj_map = np.asarray(obj_map, dtype=np.int64)
    mors = []
    for a, b in zip(obj_map[src.src], obj_map[src.tgt]):
        hom = tgt.hom(a, b)
        if len(hom) != 1:
            raise ValueError("object map is not monotone: no unique %s -> %s"
                             % (tgt.obj_id(a), tgt.obj_id(b)))
        mors.append(hom[0])
    return Functor(src, tgt, obj_map, np.array(mors, dtype=np.int64))


def projection(A, k, i):
    """The i-th projection A^k -> A."""
    src = product([A] * k)
    if k == 1:
        return Functor.identity(A)
    om = np.unravel_index(np.arange(src.n_obj), (A.n_obj,) * k)[i]
    mm = np.unravel_index(np.arange(src.n_mor), (A.n_mor,) * k)[i]
    return Functor(src, A, om, mm)


def constant(A, k, obj):
    """The functor A^k -> A with value obj (an object id) and its identity."""
    src = product([A] * k)
    o = A.obj_index(str(obj))
    return Functor(src, A, np.full(src.n_obj, o), np.full(src.n_mor, A.ident[o]))

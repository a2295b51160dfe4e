"""Independent finite implementations used only as test oracles.

Matrices are plain lists of Layer; nothing here touches Tri's lazy machinery.
"""

from codata.lazy import PairValue
from codata.tri import Layer, as_layer


def fin_tail(layers):
    return layers[1:]


def fin_cut(layers):
    return [Layer(layer.prefix[1:], layer.core) for layer in layers]


def fin_extend(f):
    return lambda layers: PairValue(layers[0].prefix[0], f(fin_cut(layers)))


def fin_redec(f, layers, n):
    """Apply the head/tail clauses of redecoration n times on a finite list."""
    out = []
    for _ in range(n):
        out.append(as_layer(f(layers)))
        f, layers = fin_extend(f), fin_tail(layers)
    return out


def closed_form_redec(f, layers, n):
    """Layer j keeps the prefix of layer j and gets core f(sub_j), where sub_j
    is the part of the matrix below layer j with j newest entries dropped."""
    out = []
    for j in range(n):
        sub = [Layer(layers[j + k].prefix[j:], layers[j + k].core) for k in range(len(layers) - j)]
        out.append(Layer(layers[j].prefix, f(sub)))
    return out


def stream_list_redec(f, xs, n):
    """Cosubstitution on a list: position i sees the suffix starting at i."""
    return [f(xs[i:]) for i in range(n)]


def position_layers(n):
    return [Layer(tuple(100 * j + i for i in range(1, j + 1)), j) for j in range(n)]

"""Closed-form values for the H-connection on the round sphere S^{4n+3}.

Independent of the C++ pipeline: no differentiation, no field extensions.
The H-connection is written as nabla + A with

    A(Y, Z) = sum_a eta^a(Y) phi_a Z + eta^a(Z) phi_a Y + Omega^a(Y, Z) xi_a

and, because nabla is torsion-free,

    Rbar(X,Y)Z = R(X,Y)Z + (nabla_X A)(Y,Z) - (nabla_Y A)(X,Z)
                 + A(X, A(Y,Z)) - A(Y, A(X,Z)).

nabla A is expanded with the Sasakian identities
    nabla_X xi = -phi X,  (nabla_X phi)Y = g(X,Y) xi - eta(Y) X,
and R(X,Y)Z = g(Y,Z) X - g(X,Z) Y.

Run: python3 hconnection_oracle.py   (prints the values frozen in the tests)
"""
import numpy as np


def left_units(n):
    # left multiplication by i, j, k on (a, b, c, d) = a + b i + c j + d k
    i = np.array([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], float)
    j = np.array([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]], float)
    k = np.array([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], float)
    return [np.kron(np.eye(n + 1), m) for m in (i, j, k)]


class Model:
    def __init__(self, n, x):
        self.I = left_units(n)
        self.x = x / np.linalg.norm(x)

    def xi(self, a):
        return -self.I[a] @ self.x

    def phi(self, a, w):
        iw = self.I[a] @ w
        return iw - (iw @ self.x) * self.x

    def eta(self, a, w):
        return self.xi(a) @ w

    def omega(self, a, u, w):
        return u @ self.phi(a, w)

    def tangent(self, v):
        return v - (v @ self.x) * self.x

    def horizontal(self, v):
        v = self.tangent(v)
        for a in range(3):
            v = v - self.eta(a, v) * self.xi(a)
        return v

    def R(self, X, Y, Z):
        return (Y @ Z) * X - (X @ Z) * Y

    def A(self, Y, Z):
        out = np.zeros_like(Y)
        for a in range(3):
            out += self.eta(a, Y) * self.phi(a, Z) + self.eta(a, Z) * self.phi(a, Y)
            out += self.omega(a, Y, Z) * self.xi(a)
        return out

    def nablaA(self, X, Y, Z):
        out = np.zeros_like(Y)
        for a in range(3):
            xi, phi, eta = self.xi(a), lambda w: self.phi(a, w), lambda w: self.eta(a, w)
            d_eta = lambda W: -(phi(X) @ W)
            d_phi = lambda W: (X @ W) * xi - eta(W) * X
            d_omega = (X @ Z) * eta(Y) - eta(Z) * (X @ Y)
            out += d_eta(Y) * phi(Z) + eta(Y) * d_phi(Z)
            out += d_eta(Z) * phi(Y) + eta(Z) * d_phi(Y)
            out += d_omega * xi - self.omega(a, Y, Z) * phi(X)
        return out

    def Rbar(self, X, Y, Z):
        return (self.R(X, Y, Z) + self.nablaA(X, Y, Z) - self.nablaA(Y, X, Z)
                + self.A(X, self.A(Y, Z)) - self.A(Y, self.A(X, Z)))

    def basis(self):
        vs = [self.xi(a) for a in range(3)]
        dim = len(self.x)
        for e in np.eye(dim):
            v = self.tangent(e)
            for b in vs:
                v = v - (v @ b) * b
            if np.linalg.norm(v) > 1e-8:
                vs.append(v / np.linalg.norm(v))
        assert len(vs) == dim - 1
        return vs

    def ricci(self, X, Y, rbar=True):
        R = self.Rbar if rbar else self.R
        # S(X, Y) = sum_i g(R(E_i, X) Y, E_i)
        return sum(R(E, X, Y) @ E for E in self.basis())


def main():
    np.set_printoptions(precision=17)
    for n, x in ((1, np.array([1., 2, 0, -1, 3, 1, -2, 1])),
                 (2, np.array([1., 2, 0, -1, 3, 1, -2, 1, 0, 1, -1, 2]))):
        m = Model(n, x)
        dim = len(x)
        rng = np.random.default_rng(7)
        u = m.horizontal(rng.normal(size=dim)); u /= np.linalg.norm(u)
        v = m.horizontal(rng.normal(size=dim)); v -= (v @ u) * u; v /= np.linalg.norm(v)
        print(f"n={n}")
        print("  ricci levi-civita S(u,u)   =", repr(m.ricci(u, u, rbar=False)))
        print("  ricci h-connection S(u,u)  =", repr(m.ricci(u, u)))
        print("  ricci h-connection S(u,v)  =", repr(m.ricci(u, v)))
        print("  Hbar_1(u)                  =", repr(m.Rbar(u, m.phi(0, u), m.phi(0, u)) @ u))
        for a in range(3):
            print(f"  |Rbar(u,v)xi_{a+1}|            =", repr(np.linalg.norm(m.Rbar(u, v, m.xi(a)))))

    # Fixed mixed triple at n=1, frozen component-wise in the tests.
    m = Model(1, np.array([1., 2, 0, -1, 3, 1, -2, 1]))
    X = m.tangent(np.array([1., 0, 0, 0, 0, 0, 0, 0]))
    Y = m.tangent(np.array([0., 1, 0, 0, 1, 0, 0, 0]))
    Z = m.tangent(np.array([0., 0, 1, 0, 0, 0, 0, -1]))
    print("point        =", [float(c) for c in m.x])
    print("Rbar(X,Y)Z   =", [float(f"{c:.17g}") for c in m.Rbar(X, Y, Z)])


if __name__ == "__main__":
    main()

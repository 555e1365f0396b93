from django.db import models


class RuleFamily(models.TextChoices):
    APPROVAL = 'approval', 'k-approval'
    BORDA = 'borda', 'k-Borda'


class Relation(models.TextChoices):
    EQUIVALENT = 'Equivalent', 'f ≡ g'
    F_STRICTLY_MORE = 'FStrictlyMore', 'f > g'
    G_STRICTLY_MORE = 'GStrictlyMore', 'g > f'
    INCOMPARABLE = 'Incomparable', 'f × g'

    def transposed(self):
        return {
            Relation.F_STRICTLY_MORE: Relation.G_STRICTLY_MORE,
            Relation.G_STRICTLY_MORE: Relation.F_STRICTLY_MORE,
        }.get(self, self)


class ClaimId(models.TextChoices):
    APPROVAL_I_NOT_GEQ_J = 'APPROVAL_I_NOT_GEQ_J'
    APPROVAL_J_NOT_GEQ_I_EVEN = 'APPROVAL_J_NOT_GEQ_I_EVEN'
    APPROVAL_J_NOT_GEQ_I_ODD = 'APPROVAL_J_NOT_GEQ_I_ODD'
    APPROVAL_J_NOT_GEQ_1 = 'APPROVAL_J_NOT_GEQ_1'
    APPROVAL_J_NOT_GEQ_I_SMALLM = 'APPROVAL_J_NOT_GEQ_I_SMALLM'
    BORDA_I_NOT_GEQ_J_EVEN = 'BORDA_I_NOT_GEQ_J_EVEN'
    BORDA_I_NOT_GEQ_J_ODD = 'BORDA_I_NOT_GEQ_J_ODD'
    BORDA_J_NOT_GEQ_I_ODD = 'BORDA_J_NOT_GEQ_I_ODD'
    BORDA_J_NOT_GEQ_I_EVEN = 'BORDA_J_NOT_GEQ_I_EVEN'
    BORDA_J_NOT_GEQ_I_N4 = 'BORDA_J_NOT_GEQ_I_N4'
    BORDA_FULL_NOT_GEQ_K = 'BORDA_FULL_NOT_GEQ_K'
    # Compositions of the constructions above, and exhaustive checks.
    COR_APPROVAL_J_NOT_GEQ_I = 'COR_APPROVAL_J_NOT_GEQ_I'
    THM_APPROVAL_INCOMPARABLE = 'THM_APPROVAL_INCOMPARABLE'
    COR_BORDA_I_NOT_GEQ_J = 'COR_BORDA_I_NOT_GEQ_J'
    COR_BORDA_J_NOT_GEQ_I = 'COR_BORDA_J_NOT_GEQ_I'
    THM_BORDA_INCOMPARABLE = 'THM_BORDA_INCOMPARABLE'
    BORDA_N2_HIERARCHY = 'BORDA_N2_HIERARCHY'
    COR_BORDA_N2_STRICT = 'COR_BORDA_N2_STRICT'
    BORDA_FULL_INCOMPARABLE = 'BORDA_FULL_INCOMPARABLE'


class VerificationStatus(models.TextChoices):
    PASS = 'pass'
    FAIL = 'fail'
    UNCOVERED = 'uncovered'

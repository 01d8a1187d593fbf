from Edrod.Business.Workspace import Workspace
from Edrod.Detectors.baselines import score_kde
from Edrod.Detectors.Interface.IDetector import IDetector
from Edrod.Model.ScoreReport import ScoreReport

"""Plain kernel density scored in the log domain.

The ranking channel is -log density, so artifacts carry `log_score` = -log density
and `score` = 1 / density (blank where that overflows).
"""
class KdeDetector(IDetector):
    def score(self, workspace: Workspace) -> ScoreReport:
        spec = self.spec
        scores = score_kde(workspace.data, spec.bandwidth, spec.normalization, workspace=workspace)
        return ScoreReport(
            method=spec.method.value,
            ranking=scores,
            log_domain=True,
            params={
                "method": spec.method.value,
                "bandwidth": spec.bandwidth,
                "normalization": spec.normalization.value,
            },
            labels=workspace.data.labels,
        )

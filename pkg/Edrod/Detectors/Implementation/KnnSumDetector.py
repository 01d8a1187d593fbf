from Edrod.Business.Workspace import Workspace
from Edrod.Detectors.baselines import score_knn_sum
from Edrod.Detectors.Interface.IDetector import IDetector
from Edrod.Model.ScoreReport import ScoreReport

"""Sum of distances to the K nearest neighbors."""
class KnnSumDetector(IDetector):
    def score(self, workspace: Workspace) -> ScoreReport:
        spec = self.spec
        scores = score_knn_sum(workspace.data, spec.k, spec.distance, workspace=workspace)
        return ScoreReport(
            method=spec.method.value,
            ranking=scores,
            log_domain=False,
            params={"method": spec.method.value, "k": spec.k, "distance": spec.distance.value},
            diagnostics={"ridge_used": workspace.ridge_used()},
            labels=workspace.data.labels,
        )

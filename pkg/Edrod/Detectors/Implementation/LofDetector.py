from Edrod.Business.Workspace import Workspace
from Edrod.Detectors.baselines import lof_from_table
from Edrod.Detectors.Interface.IDetector import IDetector
from Edrod.Model.ScoreReport import ScoreReport
from Edrod.Neighbors.selection import select_neighbors


class LofDetector(IDetector):
    def score(self, workspace: Workspace) -> ScoreReport:
        spec = self.spec
        table = select_neighbors(workspace.distances(spec.distance), spec.k, workspace.threads)
        scores, degenerate = lof_from_table(table)
        return ScoreReport(
            method=spec.method.value,
            ranking=scores,
            log_domain=False,
            params={"method": spec.method.value, "k": spec.k, "distance": spec.distance.value},
            diagnostics={
                "tie_events": table.tie_events,
                "degenerate_neighborhoods": degenerate,
                "ridge_used": workspace.ridge_used(),
            },
            labels=workspace.data.labels,
        )

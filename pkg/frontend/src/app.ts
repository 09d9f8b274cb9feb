/**
 * Single-page decision-support app for faculty heads.
 *
 * Tabs: questionnaire editor, candidate entry with explained
 * recommendations and the weight what-if panel, and the per-course
 * assignment board. All scoring happens server-side; a page reload always
 * shows committed-KB results only.
 */

import { ApiClient, ApiError, KbSnapshot } from './api.js';
import { clear, el } from './dom.js';
import type { CandidateRecord, Recommendation } from './types.js';
import { assignmentBoard } from './views/board.js';
import { candidateForm } from './views/candidate.js';
import { questionnaireEditor } from './views/questionnaire.js';
import { renderRecommendation } from './views/recommendation.js';
import { whatIfPanel } from './views/whatif.js';

interface AppState {
  snapshot: KbSnapshot;
  roster: CandidateRecord[];
  lastCandidate: CandidateRecord | null;
}

function tabbed(panes: Record<string, HTMLElement>): HTMLElement {
  const names = Object.keys(panes);
  const bar = el('nav', { class: 'tabs', role: 'tablist' });
  const body = el('main', { class: 'tab-body' });

  function show(name: string): void {
    clear(body).append(panes[name]);
    for (const button of bar.querySelectorAll('button')) {
      button.classList.toggle('active', button.dataset.tab === name);
    }
  }

  for (const name of names) {
    const button = el('button', { type: 'button', 'data-tab': name }, [name]);
    button.addEventListener('click', () => show(name));
    bar.append(button);
  }
  const root = el('div', { class: 'tabbed' }, [bar, body]);
  show(names[0]);
  return root;
}

export async function mount(root: HTMLElement, api: ApiClient): Promise<void> {
  const snapshot = await api.getKb();
  const state: AppState = { snapshot, roster: [], lastCandidate: null };
  const schema = snapshot.doc.schema;

  const resultPane = el('div', { class: 'result-pane' });

  function showCommitted(recommendation: Recommendation): void {
    clear(resultPane).append(renderRecommendation(recommendation));
  }

  function showPreview(recommendation: Recommendation): void {
    clear(resultPane).append(renderRecommendation(recommendation, { whatIf: true }));
  }

  const form = candidateForm(schema, async (candidate) => {
    try {
      const recommendation = await api.recommend(candidate);
      state.lastCandidate = candidate;
      if (!state.roster.some((c) => c.candidate_id === candidate.candidate_id)) {
        state.roster.push(candidate);
      }
      showCommitted(recommendation);
    } catch (error) {
      if (error instanceof ApiError) form.showErrors(error.violations);
      else throw error;
    }
  });

  const whatIf = whatIfPanel(
    api,
    () => state.lastCandidate,
    snapshot.doc.weight_config,
    (preview) => showPreview(preview),
    (violations) => form.showErrors(violations),
  );

  const editor = questionnaireEditor(snapshot, api, (saved) => {
    state.snapshot = saved;
  });

  const candidatePane = el('div', { class: 'candidate-pane' }, [
    form.element,
    whatIf.element,
    resultPane,
  ]);

  clear(root).append(
    el('header', {}, [
      el('h1', {}, [`${schema.faculty_name} — instructor assignment`]),
    ]),
    tabbed({
      Candidates: candidatePane,
      Questionnaires: editor.element,
      'Assignment board': assignmentBoard(schema, api, () => state.roster),
    }),
  );
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  void mount(document.getElementById('app') as HTMLElement, new ApiClient(''));
}

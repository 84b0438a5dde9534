#include "riskmat/builtin.hpp"

#include "riskmat/error.hpp"

namespace riskmat {

namespace {

// Bundled instrument files, kept in the canonical model file format so the
// parser is exercised on every load and the serialized form is bit-stable.
// Prompts and level characteristics are stored in the original Portuguese.

constexpr std::string_view kRmgpV1 = R"json({
  "id": "rmgp-v1",
  "name": "Modelo de maturidade em gerenciamento de riscos em projetos",
  "scale": {
    "options": [
      {"label": "Discordo Completamente", "points": 0},
      {"label": "Discordo Parcialmente", "points": 1},
      {"label": "Indiferente", "points": 2},
      {"label": "Concordo Parcialmente", "points": 3},
      {"label": "Concordo Completamente", "points": 4}
    ]
  },
  "levels": [
    {
      "index": 1,
      "name": "Inicial",
      "characteristics": [
        "Não existe um processo formal de identificação de riscos, quando existente tem características individuais e não corporativas.",
        "Baixa utilização de gerenciamento de risco.",
        "Processo repetitivo e reativo aos riscos.",
        "Trabalha-se com a incerteza.",
        "Lições aprendidas não se propagam para novos projetos."
      ],
      "items": []
    },
    {
      "index": 2,
      "name": "Definido",
      "characteristics": [
        "Políticas genéricas de risco e procedimentos formalizados e implementados.",
        "Recursos definidos para gerenciamento de riscos.",
        "Conscientização corporativa dos benefícios advindos do gerenciamento de riscos.",
        "Pouco ou nenhum envolvimento da alta administração.",
        "Capacitação básica da equipe de gerência de riscos.",
        "Comunicação informal de riscos."
      ],
      "items": [
        {"id": "L2Q1", "prompt": "O assunto “Gerenciamento de Riscos” é aceito por parte dos gerentes de Projetos."},
        {"id": "L2Q2", "prompt": "Existe um processo formal de identificação de riscos."},
        {"id": "L2Q3", "prompt": "A reação aos riscos é pro ativa."},
        {"id": "L2Q4", "prompt": "Existem políticas genéricas de risco e procedimentos formalizados e implementados."},
        {"id": "L2Q5", "prompt": "Existem recursos alocados para gerenciar de riscos."},
        {"id": "L2Q6", "prompt": "Há conscientização corporativa dos benefícios provenientes do gerenciamento de riscos."},
        {"id": "L2Q7", "prompt": "A alta administração da empresa está envolvida."},
        {"id": "L2Q8", "prompt": "A equipe foi capacitada para gerenciamento de riscos."},
        {"id": "L2Q9", "prompt": "O canal de comunicação para informações referentes a riscos é informal."}
      ]
    },
    {
      "index": 3,
      "name": "Gerenciado",
      "characteristics": [
        "Planejamento e gerenciamento de riscos baseado em lições aprendidas em projetos anteriores.",
        "Área de gerenciamento de riscos definida e de conhecimento de toda a corporação.",
        "Definição do gerente de riscos de cada projeto.",
        "Comprometimento da alta administração.",
        "Análise de risco qualitativa.",
        "Gerenciamento de risco em todos os projetos.",
        "Participação dos principais stakeholders no processo de gerenciamento de riscos.",
        "Comunicação formal de riscos."
      ],
      "items": [
        {"id": "L3Q1", "prompt": "O planejamento e gerenciamento de riscos baseado em lições aprendidas em projetos anteriores"},
        {"id": "L3Q2", "prompt": "Existe uma área de gerenciamento de riscos definida e de conhecimento de toda a corporação."},
        {"id": "L3Q3", "prompt": "Para cada projeto é definido um gerente de riscos"},
        {"id": "L3Q4", "prompt": "A alta administração está comprometida, apoiando e encorajando o gerenciamento de riscos."},
        {"id": "L3Q5", "prompt": "A análise de riscos é qualitativa."},
        {"id": "L3Q6", "prompt": "Gerenciamento de risco é feito em todos os projetos."},
        {"id": "L3Q7", "prompt": "Os principais fornecedores são envolvidos no processo de gerenciamento de riscos."},
        {"id": "L3Q8", "prompt": "Existe um orçamento anual corporativo definido para gerenciamento de riscos."},
        {"id": "L3Q9", "prompt": "Desenvolver um plano de ação para riscos"}
      ]
    },
    {
      "index": 4,
      "name": "Gerenciado Quantitativamente",
      "characteristics": [
        "Quantificação dos riscos analisados.",
        "Gerenciamento de oportunidades."
      ],
      "items": [
        {"id": "L4Q1", "prompt": "A análise de riscos é quantitativa."},
        {"id": "L4Q2", "prompt": "Em relação ao assunto “Gerenciamento de Riscos” por parte dos gerentes de Projeto oportunidades e ameaças são identificadas no gerenciamento de riscos."},
        {"id": "L4Q3", "prompt": "Identificar os benefícios e custos para cada resposta aos riscos:"},
        {"id": "L4Q4", "prompt": "Utilizar ferramenta de medição de área de inferência global do risco."}
      ]
    },
    {
      "index": 5,
      "name": "Otimizado",
      "characteristics": [
        "Uso ativo de informação sobre riscos para melhorar os processos organizacionais proporcionando vantagem competitiva.",
        "Comprometimento top-down (de cima para baixo) na utilização do gerenciamento de riscos (dar exemplo).",
        "Tomada de decisões baseada nas informações obtidas no gerenciamento de riscos.",
        "Pro-atividade em gerenciamento de riscos encorajada e recompensada.",
        "Reciclagens periódicas em gerenciamento de riscos.",
        "Uso de ferramentas, técnicas e metodologias no estado da arte em gerenciamento de riscos.",
        "Aprimoramento contínuo dos processos de gerenciamento de riscos."
      ],
      "items": [
        {"id": "L5Q1", "prompt": "A cultura de atenção ao risco é pró-ativa."},
        {"id": "L5Q2", "prompt": "Informação sobre riscos são ativamente utilizadas para melhorar os processos organizacionais proporcionando vantagem competitiva."},
        {"id": "L5Q3", "prompt": "Há comprometimento top-down na utilização do gerenciamento de riscos."},
        {"id": "L5Q4", "prompt": "As informações obtidas no gerenciamento de riscos influenciam na tomada de decisões."},
        {"id": "L5Q5", "prompt": "Pro-atividade em gerenciamento de riscos encorajada e recompensada pela alta administração."},
        {"id": "L5Q6", "prompt": "Reciclagens periódicas em gerenciamento de riscos."},
        {"id": "L5Q7", "prompt": "São utilizadas ferramentas, técnicas e metodologias no estado da arte em gerenciamento de riscos."},
        {"id": "L5Q8", "prompt": "Os processos de gerenciamento de riscos são continuamente revistos e melhorados."},
        {"id": "L5Q9", "prompt": "Em relação à visibilidade da organização no mercado, é tida como benchmark em gerenciamento de riscos."},
        {"id": "L5Q10", "prompt": "São utilizadas ferramentas de Gestão de Qualidade, como apoio ao Gerenciamento de Riscos."}
      ]
    }
  ],
  "threshold": {"kind": "fraction_of_max", "fraction_num": 3, "fraction_den": 4}
})json";

constexpr std::string_view kPmmmLifecycle = R"json({
  "id": "pmmm-lifecycle",
  "name": "Questionário de avaliação de maturidade em gerenciamento de projetos – fases do ciclo de vida",
  "scale": {
    "options": [
      {"label": "Discordo Totalmente", "points": -3},
      {"label": "Discordo", "points": -2},
      {"label": "Discordo Parcialmente", "points": -1},
      {"label": "Sem opinião", "points": 0},
      {"label": "Concordo Parcialmente", "points": 1},
      {"label": "Concordo", "points": 2},
      {"label": "Concordo Totalmente", "points": 3}
    ]
  },
  "levels": [
    {
      "index": 1,
      "name": "Fases do ciclo de vida",
      "characteristics": [],
      "items": [
        {"id": "Q1", "prompt": "Minha empresa reconhece a necessidade da gestão de projetos. Esta necessidade é reconhecida em todos os níveis da gerência, inclusive pela gerência sênior."},
        {"id": "Q2", "prompt": "Minha empresa tem um sistema para gerenciar tanto o custo quanto o cronograma dos projetos. O sistema requer números de encargos financeiros e códigos de conta contábil. O sistema informa variações em relação aos objetivos planejados."},
        {"id": "Q3", "prompt": "Minha empresa tem reconhecido as vantagens possíveis de serem alcançadas através da implementação da gestão de projetos. Estes benefícios são reconhecidos em todos os níveis gerenciais, incluindo a gerência sênior."},
        {"id": "Q4", "prompt": "Minha empresa ou departamento tem uma metodologia facilmente identificável de gestão de projetos que utiliza o conceito de fases ou ciclo de vida de um projeto."},
        {"id": "Q5", "prompt": "Nossos executivos apóiam ostensivamente a gestão de projetos por meio de palestras, curso, artigos e inclusive pela presença ocasional em reuniões e relatórios da equipe de projetos."},
        {"id": "Q6", "prompt": "Minha empresa tem o compromisso com o planejamento antecipado visando à qualidade. Tentamos fazer sempre o melhor possível em matéria de planejamento."},
        {"id": "Q7", "prompt": "Nossos gerentes de área de níveis médio e inicial apóiam por completo e de forma ostensiva o processo de gestão de projetos."},
        {"id": "Q8", "prompt": "Minha empresa faz o possível para minimizar os desvios de escopo (por exemplo, mudança de escopo ou redefinição da extensão do escopo) em nossos projetos."},
        {"id": "Q9", "prompt": "Nossos gerentes de área estão comprometidos não apenas com a gestão dos projetos, mas também com o cumprimento dos prazos estabelecidos para a conclusão dos objetivos."},
        {"id": "Q10", "prompt": "Os executivos em minha empresa têm bom conhecimento dos princípios de gestão de projetos."},
        {"id": "Q11", "prompt": "Minha empresa selecionou um ou mais softwares para serem utilizados como sistema de controle dos projetos."},
        {"id": "Q12", "prompt": "Nossos gerentes de área de níveis médio e inicial foram treinados e instruídos em gestão de projetos."},
        {"id": "Q13", "prompt": "Nossos executivos compreendem o conceito de responsabilidade e atuam como patrocinadores (“sponsors”) em determinados projetos."},
        {"id": "Q14", "prompt": "Nossos executivos reconheceram ou identificaram as aplicações da gestão de projetos nas várias divisões (demais unidades de Lighting) do nosso empreendimento."},
        {"id": "Q15", "prompt": "Minha empresa conseguiu integrar com sucesso o controle de custo e cronogramas tanto para a gestão de projetos quanto para relatórios de follow-up."},
        {"id": "Q16", "prompt": "Minha empresa desenvolveu um currículo de gestão de projetos (por exemplo, mais do que um ou dois cursos de capacitação) para o aperfeiçoamento das qualificações de nossos colaboradores em gestão de projetos."},
        {"id": "Q17", "prompt": "Nossos executivos reconheceram o que precisa ser feito a fim de ser alcançada a maturidade em gestão de projetos."},
        {"id": "Q18", "prompt": "Minha empresa considera e trata a gestão de projetos como profissão, e não apenas como tarefa de tempo parcial ou, quando requerido, tempo integral."},
        {"id": "Q19", "prompt": "Nossos gerentes de área e nível médio estão dispostos a liberar seus funcionários para o treinamento em gestão de projetos."},
        {"id": "Q20", "prompt": "Nossos executivos têm demonstrado disposição para mudança na maneira tradicional de conduzir negócios para chegar à maturidade em gestão de projetos."}
      ]
    }
  ],
  "threshold": {"kind": "none"},
  "groupings": [
    {"name": "Embrionária", "items": ["Q1", "Q3", "Q14", "Q17"]},
    {"name": "Aceitação – Alta Direção", "items": ["Q5", "Q10", "Q13", "Q20"]},
    {"name": "Aceitação - Gerência", "items": ["Q7", "Q9", "Q12", "Q19"]},
    {"name": "Crescimento", "items": ["Q4", "Q6", "Q8", "Q11"]},
    {"name": "Maturidade", "items": ["Q2", "Q15", "Q16", "Q18"]}
  ]
})json";

ChecklistTemplate make_checklist() {
  ChecklistTemplate t;
  t.sections = {
      {"Initiation",
       {
           "Assemble the risk management team",
           "Appoint the team leader",
           "Ensure the team has a suitable breadth of skills and experience",
       }},
      {"Establish the context",
       {
           "Familiarize the team with the project",
           "Assemble documentation according to the requirement",
           "Identify the main questions and issues of concern",
           "Review the organizational and project environment",
           "Specify the organization's objectives",
           "Identify the key stakeholders and their objectives",
           "Use the stakeholder and issues summary where appropriate",
           "Develop a communication plan if appropriate",
           "Specify the criteria, linked to the project, organizational and stakeholder objectives",
           "Develop scales for measuring the criteria, ensuring they are compatible, where relevant, with other scales used in the organization",
           "Develop scales for measuring likelihoods that are appropriate to the project timeframe and the risk areas of interest",
           "Develop a matrix for combining the criteria and likelihoods to derive levels of risks",
           "Use a simple matrix for combining them if appropriate, or develop a semi-quantitative worksheet",
           "Develop an analysis structure (target 20-50 key elements, items or activities)",
           "Use the project element summary where appropriate",
           "Number each element, describe it and list the main assumptions",
           "Use the project element description worksheets where appropriate, or refer to a WBS Dictionary if there is one",
       }},
      {"Risk identification",
       {
           "Select an appropriate process for risk identification",
           "For each element, identify and number the risks",
           "Include opportunities as well as risks where appropriate",
           "Describe each risk and list the main assumptions",
           "Assess the implications for the project",
           "Use the risk description and response description worksheets where appropriate",
       }},
      {"Risk analysis",
       {
           "Assemble data on the risks and their consequences",
           "Analyse the consequences of the risks in terms of the criteria",
           "Analyse the likelihoods of the risks arising and leading to the assessed level of consequences",
           "Summarize the analysis for each element on the assessment summary sheet",
           "Combine the consequence and likelihood assessments to derive levels of risk",
           "Use the assessment summary sheets",
       }},
      {"Risk evaluation",
       {
           "Rank risks in order of decreasing level of risk",
           "Plot the consequence and likelihood measures on the risk contour diagram if required",
           "Draw a risk profile if appropriate",
           "Identify Extreme or High risks for detailed risk action planning",
           "Identify Medium risks for management and monitoring",
           "Identify Low risks for routine management",
           "Specify the person responsible for ensuring each risk is treated appropriately (the 'risk owner')",
       }},
      {"Risk treatment",
       {
           "For each Extreme or High risk, and for Medium risks if resources allow, identify and number the feasible responses",
           "Describe each response and list the main assumptions",
           "Use response description worksheets for detailed analyses",
           "Select the best responses, taking into account all the benefits and costs, including indirect ones",
           "Use response selection worksheets where appropriate",
           "Develop Risk Action Plans for all Extreme and High risks",
           "Specify risk management responses for Medium risks",
       }},
      {"Reporting, implementation and monitoring",
       {
           "For major projects, produce a formal Risk Management Plan",
           "For other projects, collate and summarize the Risk Action Plans",
           "Implement responses and action strategies",
           "Monitor the implementation of the Risk Action Plans",
           "Assign responsibilities for monitoring",
           "Specify reporting processes, frequencies and responsibilities",
           "Undertake periodic review and evaluation",
       }},
  };
  return t;
}

}  // namespace

const std::vector<MaturityModel>& builtin_models() {
  static const std::vector<MaturityModel> models{
      parse_model(kRmgpV1, "builtin:rmgp-v1"),
      parse_model(kPmmmLifecycle, "builtin:pmmm-lifecycle"),
  };
  return models;
}

const MaturityModel& builtin_model(std::string_view id) {
  for (const auto& m : builtin_models()) {
    if (m.id == id) return m;
  }
  throw Error("unknown builtin model \"" + std::string(id) +
              "\" (available: rmgp-v1, pmmm-lifecycle)");
}

const ChecklistTemplate& builtin_checklist() {
  static const ChecklistTemplate tmpl = make_checklist();
  return tmpl;
}

}  // namespace riskmat
